#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "exgraph/graph.hpp"

namespace exgraph {

// Spanning tree (or forest) as a set of edge indices over a WeightedGraph.
struct SpanningForest {
    std::vector<int> edges;  // sorted
    Rat weight;
    bool spanning_tree = false;  // p-1 edges, one component
};

// Union-find over p elements; Kruskal's component test.
class UnionFind {
public:
    explicit UnionFind(int n);
    int find(int x);
    bool unite(int a, int b);  // false when already joined
    int classes() const { return classes_; }

private:
    std::vector<int> parent_;
    std::vector<int> rank_;
    int classes_;
};

// Ties everywhere break by (weight, edge index) lexicographic order, so all
// outputs are deterministic without the distinct-weights assumption.
SpanningForest kruskal(const WeightedGraph& g);
SpanningForest prim(const WeightedGraph& g, int start);      // requires connected
SpanningForest boruvka(const WeightedGraph& g);              // requires connected
SpanningForest reverse_delete(const WeightedGraph& g);       // requires connected

struct LocalOptimality {
    bool locally_minimal = false;
    // Best improving neighbor T - remove + add when not minimal.
    std::optional<std::pair<int, int>> improving_swap;  // (tree edge out, non-tree edge in)
};
// T minimal iff weight(T) <= weight(T') for every neighbor T' = T - e + e'.
LocalOptimality is_locally_minimal(const WeightedGraph& g, const std::vector<int>& tree);

// Exchange lemma witness: for s_e in S \ T returns t_e in T \ S such that
// both S - s_e + t_e and T + s_e - t_e are spanning trees (verified).
int exchange_witness(const WeightedGraph& g, const std::vector<int>& s_tree,
                     const std::vector<int>& t_tree, int s_e);

struct TourResult {
    std::vector<int> vertices;  // visiting order, starting vertex first
    Rat weight;
};
// Greedy nearest-neighbor Hamiltonian cycle on a complete weighted graph.
TourResult nearest_neighbor_cycle(const WeightedGraph& g, int start);

struct TransformCheck {
    bool same_edge_set = false;
    std::vector<int> before;
    std::vector<int> after;
};
// Re-runs Kruskal with every weight mapped through f and reports whether the
// MST edge set survived. Monotone maps must preserve it; a non-monotone map
// may not, and the difference is reported rather than asserted.
TransformCheck monotone_transform_check(const WeightedGraph& g,
                                        const std::function<Rat(const Rat&)>& f);
// The exercise's w -> 2^w transform, exact for integer weights.
TransformCheck pow2_transform_check(const WeightedGraph& g);

bool is_spanning_tree_of(const Pseudograph& g, const std::vector<int>& edges);

}  // namespace exgraph
