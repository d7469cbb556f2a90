#pragma once

#include <vector>

#include "exgraph/graph.hpp"

namespace exgraph {

// Bipartite graph: the first `left_size` vertices form L, the rest R; every
// edge must cross the partition.
struct Bigraph {
    Pseudograph graph;
    int left_size;

    Bigraph(Pseudograph g, int left);
    int right_size() const { return graph.vertex_count() - left_size; }
    bool on_left(int v) const { return v < left_size; }
};

// Set of edge indices with pairwise-disjoint endpoints.
struct Matching {
    std::vector<int> edges;
    int size() const { return static_cast<int>(edges.size()); }
};

bool is_matching(const Pseudograph& g, const std::vector<int>& edges);

// Maximum-cardinality matching by repeated shortest augmenting-path search
// (BFS from the unmatched left vertices, deterministic edge order).
Matching max_matching(const Bigraph& g);

// Vertices reachable by M-alternating paths from the unmatched vertices of
// one side (non-matching edges leave that side, matching edges return).
std::vector<bool> alternating_reachable(const Bigraph& g, const Matching& m, bool from_left);

struct HallResult {
    bool holds = false;
    std::vector<int> violating_set;  // subset of L with |W'| < |W| when false
};
// Exhaustive subset check of |W'| >= |W|; guarded at |L| <= 20. Cross-checked
// against max_matching covering L.
//
// The usual corollaries are direct applications: picking one child per row
// with all countries distinct (rows as L, countries as R), matching old land
// shares to overlapping new ones, choosing n positive cells of a doubly
// stochastic table with no shared row or column, and maximal non-attacking
// rooks on marked squares equalling the minimal row/column cover.
HallResult hall_check(const Bigraph& g);

// Koenig construction from a maximum matching: |cover| = |matching| and every
// edge is covered.
std::vector<int> min_vertex_cover(const Bigraph& g);

// Exact maximum matching size on an arbitrary pseudograph (branching with a
// bitmask memo; loops ignored). Guarded at p <= 24.
int max_matching_size_general(const Pseudograph& g);
std::vector<int> max_matching_general(const Pseudograph& g);

// Maximum matching plus one lowest-index incident edge per unmatched vertex;
// size p - m, every component a star. Loops are stripped first; a vertex left
// bare has no cover. Requires connected input with p >= 2.
std::vector<int> min_edge_cover(const Pseudograph& g);

struct PathsAndCut {
    std::vector<std::vector<int>> paths;  // arc-disjoint s->t paths (arc indices)
    std::vector<int> cut;                 // arcs leaving the final reachable set
};
// Max arc-disjoint s->t paths with a matching min cut: unit-capacity
// augmentation where used arcs may be traversed backwards, circuits discarded
// during path extraction. |paths| == |cut| always.
PathsAndCut edge_disjoint_paths(const Digraph& d, int s, int t);

// Marriage theorem via the min-cut theorem on G-hat (s joined to L, t joined
// to R, edges oriented left to right): L coverable iff max paths == |L|.
bool marriage_via_mincut(const Bigraph& g);

}  // namespace exgraph
