#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <random>
#include <stdexcept>

namespace exgraph::oracle {

namespace {

int components_of(int p, const std::vector<Edge>& edges) {
    std::vector<int> parent(p);
    for (int i = 0; i < p; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int classes = p;
    for (const Edge& e : edges) {
        const int a = find(e.a), b = find(e.b);
        if (a != b) {
            parent[a] = b;
            --classes;
        }
    }
    return classes;
}

}  // namespace

Int proper_coloring_count(const Pseudograph& g, int colors) {
    const int p = g.vertex_count();
    std::vector<int> assign(p, 0);
    Int count = 0;
    auto rec = [&](auto&& self, int v) -> void {
        if (v == p) {
            for (const Edge& e : g.edges())
                if (assign[e.a] == assign[e.b]) return;
            ++count;
            return;
        }
        for (int c = 0; c < colors; ++c) {
            assign[v] = c;
            self(self, v + 1);
        }
    };
    rec(rec, 0);
    return count;
}

std::vector<Int> matching_counts(const Pseudograph& g) {
    const int q = g.edge_count();
    if (q > 24) throw std::domain_error("matching oracle limited to 24 edges");
    std::vector<Int> by_size(g.vertex_count() / 2 + 1, Int(0));
    for (uint32_t mask = 0; mask < (uint32_t(1) << q); ++mask) {
        std::vector<int> used(g.vertex_count(), 0);
        bool ok = true;
        int size = 0;
        for (int e = 0; e < q && ok; ++e) {
            if (!(mask & (uint32_t(1) << e))) continue;
            const Edge ed = g.edge(e);
            if (ed.a == ed.b || used[ed.a] || used[ed.b]) ok = false;
            used[ed.a] = used[ed.b] = 1;
            ++size;
        }
        if (ok) ++by_size[size];
    }
    return by_size;
}

Int walk_count_enum(const Pseudograph& g, int n, int i, int j) {
    for (int e = 0; e < g.edge_count(); ++e)
        if (g.is_loop(e)) throw std::invalid_argument("walk oracle is loop-free");
    Int count = 0;
    auto rec = [&](auto&& self, int at, int left) -> void {
        if (left == 0) {
            if (at == j) ++count;
            return;
        }
        for (const Edge& e : g.edges()) {
            if (e.a == at) self(self, e.b, left - 1);
            if (e.b == at) self(self, e.a, left - 1);
        }
    };
    rec(rec, i, n);
    return count;
}

int max_matching_size(const Pseudograph& g) {
    int best = 0;
    std::vector<int> used(g.vertex_count(), 0);
    auto rec = [&](auto&& self, int e, int size) -> void {
        best = std::max(best, size);
        if (e == g.edge_count()) return;
        self(self, e + 1, size);
        const Edge ed = g.edge(e);
        if (ed.a != ed.b && !used[ed.a] && !used[ed.b]) {
            used[ed.a] = used[ed.b] = 1;
            self(self, e + 1, size + 1);
            used[ed.a] = used[ed.b] = 0;
        }
    };
    rec(rec, 0, 0);
    return best;
}

int min_vertex_cover_size(const Pseudograph& g) {
    const int p = g.vertex_count();
    if (p > 24) throw std::domain_error("cover oracle limited to 24 vertices");
    for (int size = 0; size <= p; ++size) {
        for (uint32_t mask = 0; mask < (uint32_t(1) << p); ++mask) {
            if (std::popcount(mask) != size) continue;
            bool covers = true;
            for (const Edge& e : g.edges())
                if (!(mask & (uint32_t(1) << e.a)) && !(mask & (uint32_t(1) << e.b))) {
                    covers = false;
                    break;
                }
            if (covers) return size;
        }
    }
    return p;
}

int min_edge_cover_size(const Pseudograph& g) {
    const int q = g.edge_count();
    if (q > 20) throw std::domain_error("edge-cover oracle limited to 20 edges");
    int best = -1;
    for (uint32_t mask = 0; mask < (uint32_t(1) << q); ++mask) {
        std::vector<int> hit(g.vertex_count(), 0);
        for (int e = 0; e < q; ++e)
            if (mask & (uint32_t(1) << e)) {
                const Edge ed = g.edge(e);
                if (ed.a == ed.b) continue;  // covers with a loop rejected
                hit[ed.a] = hit[ed.b] = 1;
            }
        if (std::find(hit.begin(), hit.end(), 0) == hit.end()) {
            const int size = std::popcount(mask);
            if (best == -1 || size < best) best = size;
        }
    }
    return best;
}

namespace {

void all_simple_paths(const Digraph& d, int s, int t, std::vector<std::vector<int>>& out) {
    std::vector<int> walk;
    std::vector<bool> on_path(d.vertex_count, false);
    auto rec = [&](auto&& self, int v) -> void {
        if (v == t) {
            out.push_back(walk);
            return;
        }
        on_path[v] = true;
        for (int a = 0; a < static_cast<int>(d.arcs.size()); ++a) {
            if (d.arcs[a].a != v || on_path[d.arcs[a].b]) continue;
            if (d.arcs[a].b == v) continue;
            walk.push_back(a);
            self(self, d.arcs[a].b);
            walk.pop_back();
        }
        on_path[v] = false;
    };
    rec(rec, s);
}

}  // namespace

int max_arc_disjoint_paths(const Digraph& d, int s, int t) {
    std::vector<std::vector<int>> paths;
    all_simple_paths(d, s, t, paths);
    // Largest pairwise arc-disjoint family by recursion over the path list.
    int best = 0;
    std::vector<bool> used(d.arcs.size(), false);
    auto rec = [&](auto&& self, size_t idx, int size) -> void {
        best = std::max(best, size);
        for (size_t i = idx; i < paths.size(); ++i) {
            bool free = true;
            for (int a : paths[i])
                if (used[a]) {
                    free = false;
                    break;
                }
            if (!free) continue;
            for (int a : paths[i]) used[a] = true;
            self(self, i + 1, size + 1);
            for (int a : paths[i]) used[a] = false;
        }
    };
    rec(rec, 0, 0);
    return best;
}

int min_cut_size(const Digraph& d, int s, int t) {
    const int m = static_cast<int>(d.arcs.size());
    if (m > 22) throw std::domain_error("cut oracle limited to 22 arcs");
    auto reachable = [&](uint32_t removed) -> bool {
        std::vector<bool> seen(d.vertex_count, false);
        seen[s] = true;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            for (int a = 0; a < m; ++a) {
                if (removed & (uint32_t(1) << a)) continue;
                if (d.arcs[a].a == v && !seen[d.arcs[a].b]) {
                    seen[d.arcs[a].b] = true;
                    queue.push_back(d.arcs[a].b);
                }
            }
        }
        return seen[t];
    };
    for (int size = 0; size <= m; ++size)
        for (uint32_t mask = 0; mask < (uint32_t(1) << m); ++mask)
            if (std::popcount(mask) == size && !reachable(mask)) return size;
    return m;
}

namespace {

// Classifies every spanning subgraph of K_n (edge subsets of the complete
// graph), feeding the per-class counters.
template <typename Pred>
Int count_spanning_subgraphs(int n, Pred&& keep) {
    std::vector<Edge> all;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) all.push_back({i, j});
    const int m = static_cast<int>(all.size());
    if (m > 21) throw std::domain_error("subgraph oracle limited to K_7");
    Int count = 0;
    for (uint32_t mask = 0; mask < (uint32_t(1) << m); ++mask) {
        std::vector<Edge> sub;
        for (int e = 0; e < m; ++e)
            if (mask & (uint32_t(1) << e)) sub.push_back(all[e]);
        if (keep(sub)) ++count;
    }
    return count;
}

std::vector<int> degrees_of(int n, const std::vector<Edge>& edges) {
    std::vector<int> deg(n, 0);
    for (const Edge& e : edges) {
        ++deg[e.a];
        ++deg[e.b];
    }
    return deg;
}

}  // namespace

Int spanning_perfect_matchings(int n) {
    return count_spanning_subgraphs(n, [&](const std::vector<Edge>& sub) {
        const std::vector<int> deg = degrees_of(n, sub);
        return std::all_of(deg.begin(), deg.end(), [](int d) { return d == 1; });
    });
}

Int spanning_all_matchings(int n) {
    return count_spanning_subgraphs(n, [&](const std::vector<Edge>& sub) {
        const std::vector<int> deg = degrees_of(n, sub);
        return std::all_of(deg.begin(), deg.end(), [](int d) { return d <= 1; });
    });
}

Int spanning_two_factors(int n) {
    return count_spanning_subgraphs(n, [&](const std::vector<Edge>& sub) {
        const std::vector<int> deg = degrees_of(n, sub);
        return std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; });
    });
}

Int spanning_forests(int n) {
    return count_spanning_subgraphs(n, [&](const std::vector<Edge>& sub) {
        return components_of(n, sub) == n - static_cast<int>(sub.size());
    });
}

Int connected_spanning_subgraphs(int n) {
    return count_spanning_subgraphs(
        n, [&](const std::vector<Edge>& sub) { return components_of(n, sub) == 1; });
}

Int spanning_k_component_matchings(int n, int k) {
    return count_spanning_subgraphs(n, [&](const std::vector<Edge>& sub) {
        const std::vector<int> deg = degrees_of(n, sub);
        if (!std::all_of(deg.begin(), deg.end(), [](int d) { return d == 1; })) return false;
        return components_of(n, sub) == k;
    });
}

Pseudograph random_pseudograph(uint64_t seed, const RandomGraphSpec& spec) {
    std::mt19937_64 rng(seed);
    auto below = [&](int m) { return static_cast<int>(rng() % static_cast<uint64_t>(m)); };
    for (;;) {
        const int p = 1 + below(spec.max_vertices);
        const int q = below(spec.max_edges + 1);
        Pseudograph g(p);
        for (int e = 0; e < q; ++e) {
            int a = below(p);
            int b = below(p);
            if (!spec.allow_loops && p > 1) {
                while (b == a) b = below(p);
            }
            if (!spec.allow_loops && a == b) continue;
            if (!spec.allow_parallel && g.multiplicity(a, b) > 0) continue;
            g.add_edge(a, b);
        }
        if (spec.require_connected && !is_connected(g)) continue;
        return g;
    }
}

std::vector<Rat> distinct_weights(int count, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Rat> out;
    for (int i = 0; i < count; ++i)
        out.push_back(make_rat(i + 1, 1 + static_cast<int>(rng() % 7)));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    while (static_cast<int>(out.size()) < count)
        out.push_back(Rat(static_cast<long>(out.size()) + 100, 1));
    std::shuffle(out.begin(), out.end(), rng);
    return out;
}

std::vector<Rat> small_integer_weights(int count, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Rat> out;
    for (int i = 0; i < count; ++i) out.push_back(Rat(1 + static_cast<int>(rng() % 5), 1));
    return out;
}

}  // namespace exgraph::oracle
