#include "exgraph/surfaces.hpp"

#include <algorithm>
#include <stdexcept>

namespace exgraph {

RotationSystem::RotationSystem(Pseudograph g, std::vector<std::vector<int>> rot)
    : graph(std::move(g)), rotation(std::move(rot)) {
    if (!is_connected(graph)) throw std::domain_error("rotation system needs a connected base");
    if (static_cast<int>(rotation.size()) != graph.vertex_count())
        throw std::invalid_argument("one rotation per vertex required");
    std::vector<int> seen(2 * graph.edge_count(), 0);
    for (int v = 0; v < graph.vertex_count(); ++v) {
        for (int dart : rotation[v]) {
            if (dart < 0 || dart >= 2 * graph.edge_count())
                throw std::invalid_argument("dart out of range");
            const Edge e = graph.edge(dart_edge(dart));
            const int end_vertex = dart_side(dart) == 0 ? e.a : e.b;
            if (end_vertex != v)
                throw std::invalid_argument("dart listed at the wrong vertex");
            ++seen[dart];
        }
    }
    for (int count : seen)
        if (count != 1) throw std::invalid_argument("every edge-end must appear exactly once");
}

RotationSystem rotation_from_edge_lists(const Pseudograph& g,
                                        const std::vector<std::vector<int>>& edge_lists) {
    if (static_cast<int>(edge_lists.size()) != g.vertex_count())
        throw std::invalid_argument("one rotation line per vertex required");
    std::vector<std::vector<int>> rot(g.vertex_count());
    std::vector<int> uses(g.edge_count(), 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        for (int e : edge_lists[v]) {
            if (e < 0 || e >= g.edge_count()) throw std::invalid_argument("edge index out of range");
            const Edge ed = g.edge(e);
            int side;
            if (ed.a == ed.b) {
                if (uses[e] > 1)
                    throw std::invalid_argument("loop listed more than twice at its vertex");
                side = uses[e];  // first occurrence is the a-end
            } else if (ed.a == v) {
                side = 0;
            } else if (ed.b == v) {
                side = 1;
            } else {
                throw std::invalid_argument("edge not incident to the vertex");
            }
            ++uses[e];
            rot[v].push_back(dart_of(e, side));
        }
    }
    return RotationSystem(g, std::move(rot));
}

RotationSystem default_rotation(const Pseudograph& g) {
    std::vector<std::vector<int>> lists(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int e : g.incident_edges(v)) {
            lists[v].push_back(e);
            if (g.is_loop(e)) lists[v].push_back(e);
        }
    return rotation_from_edge_lists(g, lists);
}

RotationSystem rotation_from_neighbor_lists(const Pseudograph& g,
                                            const std::vector<std::vector<int>>& neighbor_lists) {
    if (!is_simple(g)) throw std::invalid_argument("neighbor rotations need a simple graph");
    std::vector<std::vector<int>> lists(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        for (int w : neighbor_lists.at(v)) {
            int found = -1;
            for (int e : g.incident_edges(v))
                if (g.edge(e).a + g.edge(e).b - v == w) {
                    found = e;
                    break;
                }
            if (found == -1) throw std::invalid_argument("listed vertex is not a neighbor");
            lists[v].push_back(found);
        }
    }
    return rotation_from_edge_lists(g, lists);
}

RotationSystem k7_torus_rotation() {
    const Pseudograph k7 = complete_graph(7);
    std::vector<std::vector<int>> neighbors(7);
    for (int i = 0; i < 7; ++i)
        for (int off : {1, 3, 2, 6, 4, 5}) neighbors[i].push_back((i + off) % 7);
    return rotation_from_neighbor_lists(k7, neighbors);
}

RotationSystem torus_model_rotation() {
    Pseudograph g(1, {{0, 0}, {0, 0}});
    // Interleaved a b a' b'.
    std::vector<std::vector<int>> rot{{dart_of(0, 0), dart_of(1, 0), dart_of(0, 1), dart_of(1, 1)}};
    return RotationSystem(std::move(g), std::move(rot));
}

FaceTrace trace_faces(const RotationSystem& rs) {
    const int darts = 2 * rs.graph.edge_count();
    // next_at[d]: successor of d in its vertex's cyclic rotation.
    std::vector<int> next_at(darts, -1);
    for (const std::vector<int>& rot : rs.rotation)
        for (size_t i = 0; i < rot.size(); ++i)
            next_at[rot[i]] = rot[(i + 1) % rot.size()];

    FaceTrace out;
    if (darts == 0) {
        // A single vertex with no edges bounds one face.
        out.faces.push_back({});
        return out;
    }
    std::vector<bool> visited(darts, false);
    for (int start = 0; start < darts; ++start) {
        if (visited[start]) continue;
        std::vector<int> face;
        int d = start;
        do {
            visited[d] = true;
            face.push_back(d);
            d = next_at[dart_opposite(d)];
        } while (d != start);
        out.faces.push_back(std::move(face));
    }
    return out;
}

EulerResult euler_genus(const RotationSystem& rs) {
    const int p = rs.graph.vertex_count();
    const int q = rs.graph.edge_count();
    const int r = trace_faces(rs).count();
    EulerResult out;
    out.chi = p - q + r;
    if (out.chi % 2 != 0) throw std::logic_error("orientable rotation systems have even chi");
    out.genus = (2 - out.chi) / 2;
    if (out.genus < 0) throw std::logic_error("negative genus from face tracing");
    return out;
}

ToroidalCheck toroidal_necessary(const Pseudograph& g) {
    if (!is_simple(g)) throw std::invalid_argument("toroidal bounds apply to simple graphs");
    const int p = g.vertex_count();
    const int q = g.edge_count();
    ToroidalCheck out;
    out.q_le_3p = q <= 3 * p;
    bool violated = !out.q_le_3p;
    const std::optional<int> gi = girth(g);
    if (!gi.has_value() || *gi >= 4) {
        out.girth4_q_le_2p = q <= 2 * p;
        if (!*out.girth4_q_le_2p) violated = true;
    }
    out.verdict = violated ? "not toroidal" : "possibly toroidal";
    return out;
}

int heawood_bound(int genus) {
    if (genus < 0) throw std::invalid_argument("genus must be nonnegative");
    const Int s = isqrt(Int(1) + Int(48) * genus);
    const Int bound = (7 + s) / 2;
    return static_cast<int>(bound.get_si());
}

Pseudograph apply_minor_step(const Pseudograph& g, const MinorStep& step) {
    switch (step.kind) {
        case MinorStep::Kind::delete_vertex: return g.delete_vertex(step.index);
        case MinorStep::Kind::delete_edge: return g.delete_edge(step.index);
        case MinorStep::Kind::contract_edge: return g.contract_edge(step.index);
    }
    throw std::logic_error("unreachable");
}

std::optional<std::vector<MinorStep>> loop_minor_chain(const Pseudograph& g) {
    // Locate a shortest cycle as an edge set; forests have none.
    if (!girth(g).has_value()) return std::nullopt;

    std::vector<MinorStep> steps;
    Pseudograph work = g;

    // If a loop already exists, reduce around it; otherwise manufacture one by
    // contracting a cycle down to length one.
    auto find_loop = [](const Pseudograph& h) {
        for (int e = 0; e < h.edge_count(); ++e)
            if (h.is_loop(e)) return e;
        return -1;
    };

    while (find_loop(work) == -1) {
        // Shortest cycle through edge e has length dist_{G-e}(a,b) + 1; pick
        // the best e and contract it, shrinking the cycle by one.
        int best_edge = -1;
        int best_len = -1;
        for (int e = 0; e < work.edge_count(); ++e) {
            const Edge ed = work.edge(e);
            const int d = bfs_distances(work.delete_edge(e), ed.a)[ed.b];
            if (d < 0) continue;
            if (best_edge == -1 || d + 1 < best_len) {
                best_edge = e;
                best_len = d + 1;
            }
        }
        steps.push_back({MinorStep::Kind::contract_edge, best_edge});
        work = work.contract_edge(best_edge);
    }

    // Delete every other edge, then every other vertex.
    for (int e = work.edge_count() - 1; e >= 0; --e) {
        if (e == find_loop(work)) continue;
        steps.push_back({MinorStep::Kind::delete_edge, e});
        work = work.delete_edge(e);
    }
    while (work.vertex_count() > 1) {
        int victim = -1;
        for (int v = 0; v < work.vertex_count(); ++v)
            if (v != work.edge(0).a) {
                victim = v;
                break;
            }
        steps.push_back({MinorStep::Kind::delete_vertex, victim});
        work = work.delete_vertex(victim);
    }
    if (work.vertex_count() != 1 || work.edge_count() != 1 || !work.is_loop(0))
        throw std::logic_error("loop reduction went astray");
    return steps;
}

}  // namespace exgraph
