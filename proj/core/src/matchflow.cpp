#include "exgraph/matchflow.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>

namespace exgraph {

Bigraph::Bigraph(Pseudograph g, int left) : graph(std::move(g)), left_size(left) {
    if (left < 1 || left >= graph.vertex_count())
        throw std::invalid_argument("both parts of a bigraph must be nonempty");
    for (const Edge& e : graph.edges())
        if ((e.a < left) == (e.b < left))
            throw std::invalid_argument("every edge of a bigraph must cross the partition");
}

bool is_matching(const Pseudograph& g, const std::vector<int>& edges) {
    std::vector<int> hits(g.vertex_count(), 0);
    for (int e : edges) {
        const Edge ed = g.edge(e);
        if (ed.a == ed.b) return false;
        if (++hits[ed.a] > 1 || ++hits[ed.b] > 1) return false;
    }
    return true;
}

namespace {

// match_edge[v] = matching edge at v or -1.
std::vector<int> matched_edges_by_vertex(const Pseudograph& g, const std::vector<int>& edges) {
    std::vector<int> at(g.vertex_count(), -1);
    for (int e : edges) {
        at[g.edge(e).a] = e;
        at[g.edge(e).b] = e;
    }
    return at;
}

int other_end(const Edge& e, int v) { return e.a == v ? e.b : e.a; }

}  // namespace

Matching max_matching(const Bigraph& g) {
    const Pseudograph& gr = g.graph;
    std::vector<int> match_at(gr.vertex_count(), -1);  // edge index or -1

    for (;;) {
        // BFS layer search from every unmatched left vertex; parent chain
        // stores the edge used to reach a vertex.
        std::vector<int> via_edge(gr.vertex_count(), -1);
        std::vector<bool> seen(gr.vertex_count(), false);
        std::deque<int> queue;
        for (int l = 0; l < g.left_size; ++l)
            if (match_at[l] == -1) {
                seen[l] = true;
                queue.push_back(l);
            }
        int reached = -1;
        while (!queue.empty() && reached == -1) {
            const int v = queue.front();
            queue.pop_front();
            if (g.on_left(v)) {
                for (int e : gr.incident_edges(v)) {
                    if (e == match_at[v]) continue;
                    const int w = other_end(gr.edge(e), v);
                    if (seen[w]) continue;
                    seen[w] = true;
                    via_edge[w] = e;
                    if (match_at[w] == -1) {
                        reached = w;  // augmenting path found
                        break;
                    }
                    queue.push_back(w);
                }
            } else {
                const int e = match_at[v];
                const int w = other_end(gr.edge(e), v);
                if (!seen[w]) {
                    seen[w] = true;
                    via_edge[w] = e;
                    queue.push_back(w);
                }
            }
        }
        if (reached == -1) break;
        // Flip the path: non-matching edges become matched, matched drop out.
        int v = reached;
        while (v != -1) {
            const int e = via_edge[v];
            const int w = other_end(gr.edge(e), v);
            const int prev = via_edge[w];  // matching edge into w, or -1 at the root
            match_at[v] = e;
            match_at[w] = e;
            v = prev == -1 ? -1 : other_end(gr.edge(prev), w);
            if (prev == -1) break;
        }
    }

    Matching out;
    for (int l = 0; l < g.left_size; ++l)
        if (match_at[l] != -1) out.edges.push_back(match_at[l]);
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

std::vector<bool> alternating_reachable(const Bigraph& g, const Matching& m, bool from_left) {
    const Pseudograph& gr = g.graph;
    const std::vector<int> match_at = matched_edges_by_vertex(gr, m.edges);
    std::vector<bool> seen(gr.vertex_count(), false);
    std::deque<int> queue;
    for (int v = 0; v < gr.vertex_count(); ++v)
        if (g.on_left(v) == from_left && match_at[v] == -1) {
            seen[v] = true;
            queue.push_back(v);
        }
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        const bool start_side = g.on_left(v) == from_left;
        for (int e : gr.incident_edges(v)) {
            const bool matching_edge = match_at[v] == e;
            // Leave the start side by non-matching edges, return by matching ones.
            if (start_side == matching_edge) continue;
            const int w = other_end(gr.edge(e), v);
            if (!seen[w]) {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    return seen;
}

HallResult hall_check(const Bigraph& g) {
    if (g.left_size > 20) throw std::domain_error("hall_check guard: |L| <= 20");
    HallResult out;
    out.holds = true;
    for (uint32_t mask = 1; mask < (uint32_t(1) << g.left_size); ++mask) {
        std::vector<bool> neighbor(g.graph.vertex_count(), false);
        int w_size = 0, n_size = 0;
        for (int l = 0; l < g.left_size; ++l) {
            if (!(mask & (uint32_t(1) << l))) continue;
            ++w_size;
            for (int e : g.graph.incident_edges(l)) {
                const int r = other_end(g.graph.edge(e), l);
                if (!neighbor[r]) {
                    neighbor[r] = true;
                    ++n_size;
                }
            }
        }
        if (n_size < w_size) {
            out.holds = false;
            for (int l = 0; l < g.left_size; ++l)
                if (mask & (uint32_t(1) << l)) out.violating_set.push_back(l);
            break;
        }
    }
    const bool covered = max_matching(g).size() == g.left_size;
    if (covered != out.holds)
        throw std::logic_error("Hall condition and matching coverage disagree");
    return out;
}

std::vector<int> min_vertex_cover(const Bigraph& g) {
    const Matching m = max_matching(g);
    const std::vector<bool> q_left = alternating_reachable(g, m, true);
    std::vector<int> cover;
    for (int e : m.edges) {
        const Edge ed = g.graph.edge(e);
        const int l = g.on_left(ed.a) ? ed.a : ed.b;
        const int r = g.on_left(ed.a) ? ed.b : ed.a;
        // Matched edges inside Q_L contribute their right vertex.
        cover.push_back(q_left[l] ? r : l);
    }
    std::sort(cover.begin(), cover.end());
    for (const Edge& e : g.graph.edges())
        if (!std::binary_search(cover.begin(), cover.end(), e.a) &&
            !std::binary_search(cover.begin(), cover.end(), e.b))
            throw std::logic_error("Koenig construction failed to cover an edge");
    return cover;
}

namespace {

int general_matching_impl(const Pseudograph& g, uint32_t alive,
                          std::unordered_map<uint32_t, int>& memo,
                          const std::vector<std::vector<std::pair<int, int>>>& adj) {
    // Lowest alive vertex either stays unmatched or matches a neighbor.
    int v = -1;
    for (int i = 0; i < g.vertex_count(); ++i)
        if (alive & (uint32_t(1) << i)) {
            v = i;
            break;
        }
    if (v == -1) return 0;
    if (auto it = memo.find(alive); it != memo.end()) return it->second;
    const uint32_t without_v = alive & ~(uint32_t(1) << v);
    int best = general_matching_impl(g, without_v, memo, adj);
    for (auto [w, e] : adj[v]) {
        if (w == v || !(alive & (uint32_t(1) << w))) continue;
        const uint32_t rest = without_v & ~(uint32_t(1) << w);
        best = std::max(best, 1 + general_matching_impl(g, rest, memo, adj));
    }
    memo.emplace(alive, best);
    return best;
}

std::vector<std::vector<std::pair<int, int>>> adjacency_with_edges(const Pseudograph& g) {
    std::vector<std::vector<std::pair<int, int>>> adj(g.vertex_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge ed = g.edge(e);
        if (ed.a == ed.b) continue;
        adj[ed.a].push_back({ed.b, e});
        adj[ed.b].push_back({ed.a, e});
    }
    return adj;
}

}  // namespace

int max_matching_size_general(const Pseudograph& g) {
    if (g.vertex_count() > 24) throw std::domain_error("general matching guard: p <= 24");
    std::unordered_map<uint32_t, int> memo;
    const auto adj = adjacency_with_edges(g);
    return general_matching_impl(g, (uint32_t(1) << g.vertex_count()) - 1, memo, adj);
}

std::vector<int> max_matching_general(const Pseudograph& g) {
    // Rebuild a witness by greedily committing edges that keep the optimum.
    const int target = max_matching_size_general(g);
    std::vector<int> chosen;
    Pseudograph work = g;
    std::vector<int> index_map(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) index_map[e] = e;

    int remaining = target;
    while (remaining > 0) {
        bool advanced = false;
        for (int e = 0; e < work.edge_count() && !advanced; ++e) {
            const Edge ed = work.edge(e);
            if (ed.a == ed.b) continue;
            // Keep e if the rest still supports remaining-1 more edges.
            Pseudograph rest = work.delete_vertex(std::max(ed.a, ed.b));
            if (rest.vertex_count() > 1) rest = rest.delete_vertex(std::min(ed.a, ed.b));
            if (max_matching_size_general(rest) >= remaining - 1) {
                chosen.push_back(index_map[e]);
                // Rebuild the index map across the two vertex deletions.
                std::vector<int> survivors;
                for (int f = 0; f < work.edge_count(); ++f) {
                    const Edge fe = work.edge(f);
                    if (fe.a == ed.a || fe.a == ed.b || fe.b == ed.a || fe.b == ed.b) continue;
                    survivors.push_back(index_map[f]);
                }
                work = rest;
                index_map = std::move(survivors);
                --remaining;
                advanced = true;
            }
        }
        if (!advanced) throw std::logic_error("matching witness reconstruction failed");
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

std::vector<int> min_edge_cover(const Pseudograph& g) {
    if (g.vertex_count() < 2) throw std::domain_error("edge cover needs p >= 2");
    if (!is_connected(g)) throw std::domain_error("edge cover needs a connected graph");
    const std::vector<int> deg = g.without_loops().degrees();
    for (int v = 0; v < g.vertex_count(); ++v)
        if (deg[v] == 0)
            throw std::domain_error("no edge cover: vertex " + std::to_string(v) +
                                    " has no non-loop edge");
    const std::vector<int> matching = max_matching_general(g);
    std::vector<bool> covered(g.vertex_count(), false);
    for (int e : matching) {
        covered[g.edge(e).a] = true;
        covered[g.edge(e).b] = true;
    }
    std::vector<int> cover = matching;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (covered[v]) continue;
        for (int e : g.incident_edges(v)) {
            if (!g.is_loop(e)) {
                cover.push_back(e);  // lowest-index incident edge
                break;
            }
        }
        covered[v] = true;
    }
    std::sort(cover.begin(), cover.end());
    return cover;
}

namespace {

struct FlowState {
    std::vector<std::vector<std::pair<int, int>>> out_arcs;  // per vertex (target, arc)
    std::vector<std::vector<std::pair<int, int>>> in_arcs;   // per vertex (source, arc)
    std::vector<uint8_t> flow;
};

FlowState build_flow(const Digraph& d) {
    FlowState st;
    st.out_arcs.resize(d.vertex_count);
    st.in_arcs.resize(d.vertex_count);
    st.flow.assign(d.arcs.size(), 0);
    for (int a = 0; a < static_cast<int>(d.arcs.size()); ++a) {
        st.out_arcs[d.arcs[a].a].push_back({d.arcs[a].b, a});
        st.in_arcs[d.arcs[a].b].push_back({d.arcs[a].a, a});
    }
    return st;
}

// BFS in the residual graph: empty arcs forward, full arcs backward. When
// `augment` is set and t is reachable, the flow flips along the path found.
bool residual_search(const Digraph& d, FlowState& st, int s, int t, bool augment,
                     std::vector<bool>* reach_out) {
    std::vector<int> via(d.vertex_count, -2);  // -2 unseen, else arc (+1 offset sign below)
    std::vector<bool> forward(d.vertex_count, false);
    via[s] = -1;
    std::deque<int> queue{s};
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (auto [w, a] : st.out_arcs[v])
            if (st.flow[a] == 0 && via[w] == -2) {
                via[w] = a;
                forward[w] = true;
                queue.push_back(w);
            }
        for (auto [w, a] : st.in_arcs[v])
            if (st.flow[a] == 1 && via[w] == -2) {
                via[w] = a;
                forward[w] = false;
                queue.push_back(w);
            }
    }
    if (reach_out) {
        reach_out->assign(d.vertex_count, false);
        for (int v = 0; v < d.vertex_count; ++v) (*reach_out)[v] = via[v] != -2;
    }
    if (via[t] == -2) return false;
    if (augment) {
        // Flip flow along the augmenting path.
        int v = t;
        while (v != s) {
            const int a = via[v];
            if (forward[v]) {
                st.flow[a] = 1;
                v = d.arcs[a].a;
            } else {
                st.flow[a] = 0;
                v = d.arcs[a].b;
            }
        }
    }
    return true;
}

}  // namespace

PathsAndCut edge_disjoint_paths(const Digraph& d, int s, int t) {
    if (s == t) throw std::invalid_argument("source and sink must differ");
    if (s < 0 || s >= d.vertex_count || t < 0 || t >= d.vertex_count)
        throw std::out_of_range("vertex index out of range");
    FlowState st = build_flow(d);
    int value = 0;
    while (residual_search(d, st, s, t, true, nullptr)) ++value;

    PathsAndCut out;
    // Cut: arcs leaving the residual-reachable set S; all carry flow.
    std::vector<bool> reach;
    residual_search(d, st, s, t, false, &reach);
    for (int a = 0; a < static_cast<int>(d.arcs.size()); ++a)
        if (reach[d.arcs[a].a] && !reach[d.arcs[a].b]) out.cut.push_back(a);

    // Path extraction walks flow arcs; revisiting a vertex closes a circuit,
    // which is discarded.
    std::vector<bool> used(d.arcs.size(), false);
    for (int i = 0; i < value; ++i) {
        std::vector<int> walk;
        std::vector<int> pos(d.vertex_count, -1);
        int v = s;
        pos[s] = 0;
        while (v != t) {
            int next_arc = -1;
            for (auto [w, a] : st.out_arcs[v])
                if (st.flow[a] == 1 && !used[a] && (next_arc == -1 || a < next_arc)) next_arc = a;
            if (next_arc == -1) throw std::logic_error("flow decomposition ran dry");
            used[next_arc] = true;
            const int w = d.arcs[next_arc].b;
            walk.push_back(next_arc);
            if (pos[w] != -1) {
                // Discard the circuit w -> ... -> w.
                for (size_t k = pos[w]; k < walk.size(); ++k) {
                    const int mid = d.arcs[walk[k]].b;
                    if (mid != w) pos[mid] = -1;
                }
                walk.resize(pos[w]);
            } else {
                pos[w] = static_cast<int>(walk.size());
            }
            v = w;
        }
        out.paths.push_back(std::move(walk));
    }
    if (static_cast<int>(out.cut.size()) != value)
        throw std::logic_error("min-cut duality violated");
    return out;
}

bool marriage_via_mincut(const Bigraph& g) {
    const int p = g.graph.vertex_count();
    const int s = p, t = p + 1;
    std::vector<Edge> arcs;
    for (int l = 0; l < g.left_size; ++l) arcs.push_back({s, l});
    for (const Edge& e : g.graph.edges()) {
        const int l = g.on_left(e.a) ? e.a : e.b;
        const int r = g.on_left(e.a) ? e.b : e.a;
        arcs.push_back({l, r});
    }
    for (int r = g.left_size; r < p; ++r) arcs.push_back({r, t});
    const Digraph hat(p + 2, std::move(arcs));
    return static_cast<int>(edge_disjoint_paths(hat, s, t).paths.size()) == g.left_size;
}

}  // namespace exgraph
