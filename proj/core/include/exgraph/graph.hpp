#pragma once

#include <optional>
#include <string>
#include <vector>

#include "exgraph/numeric.hpp"

namespace exgraph {

// Endpoints of an edge; a == b encodes a loop. Edge identity is the position
// in the owning graph's edge list.
struct Edge {
    int a = 0;
    int b = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
};

// Finite pseudograph: dense 0-based vertex indices, edge multiset permitting
// loops and parallel edges. Mutating operations return fresh values; the
// counting recursions branch on G-e and G/e simultaneously.
class Pseudograph {
public:
    explicit Pseudograph(int vertex_count);
    Pseudograph(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const { return p_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int e) const;
    bool is_loop(int e) const;

    void add_edge(int a, int b);

    // Degree counts loops twice.
    int degree(int v) const;
    std::vector<int> degrees() const;
    int loop_count(int v) const;
    int multiplicity(int u, int v) const;
    std::vector<int> incident_edges(int v) const;
    std::vector<int> neighbors(int v) const;  // distinct, sorted, excludes v itself

    Pseudograph delete_edge(int e) const;
    // Merges the endpoints into the smaller index and moves the last vertex
    // into the freed slot so indices stay dense. Rejects loops.
    Pseudograph contract_edge(int e) const;
    // Removes v with its incident edges; the last vertex moves into the slot.
    Pseudograph delete_vertex(int v) const;
    Pseudograph without_loops() const;

    friend bool operator==(const Pseudograph&, const Pseudograph&) = default;

private:
    void check_edge_index(int e) const;
    void check_vertex_index(int v) const;

    int p_;
    std::vector<Edge> edges_;
};

// Directed pseudograph; parallel arcs allowed.
struct Digraph {
    int vertex_count = 0;
    std::vector<Edge> arcs;  // a = source, b = target

    Digraph(int p, std::vector<Edge> arcs_in);
};

// Exact rational edge weights, one per edge.
struct WeightedGraph {
    Pseudograph graph;
    std::vector<Rat> weights;

    WeightedGraph(Pseudograph g, std::vector<Rat> w);
    Rat weight_of(const std::vector<int>& edge_set) const;
};

// Symmetric nonnegative integer matrix; loops contribute 2 to the diagonal so
// row sums equal degrees.
struct AdjacencyMatrix {
    int p = 0;
    std::vector<Int> entries;  // row-major p*p

    const Int& at(int i, int j) const { return entries[static_cast<size_t>(i) * p + j]; }
    Int& at(int i, int j) { return entries[static_cast<size_t>(i) * p + j]; }
};

AdjacencyMatrix adjacency_matrix(const Pseudograph& g);
// Entry (i,j) of A^n.
Int walk_count(const Pseudograph& g, int n, int i, int j);

// --- structure queries ---

std::vector<int> component_labels(const Pseudograph& g);
int component_count(const Pseudograph& g);
bool is_connected(const Pseudograph& g);
bool is_simple(const Pseudograph& g);
bool is_tree(const Pseudograph& g);

// -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Pseudograph& g, int source);
int distance(const Pseudograph& g, int u, int v);
int diameter(const Pseudograph& g);  // throws std::domain_error if disconnected
// Shortest cycle length: 1 for a loop, 2 for a parallel pair; nullopt if acyclic.
std::optional<int> girth(const Pseudograph& g);

struct Bipartition {
    bool bipartite = false;
    std::vector<int> side;  // 0/1 per vertex when bipartite
};
Bipartition bipartition(const Pseudograph& g);

// Edges whose deletion disconnects their component. Loops and parallel edges
// are never bridges.
std::vector<int> bridges(const Pseudograph& g);

// Split into induced component subgraphs; `vertex_map[label]` gives the
// original index of each component vertex.
struct ComponentSplit {
    std::vector<Pseudograph> components;
    std::vector<std::vector<int>> vertex_map;
};
ComponentSplit split_components(const Pseudograph& g);

// --- named families ---

Pseudograph null_graph(int p);
Pseudograph complete_graph(int p);
Pseudograph complete_bipartite(int m, int n);
Pseudograph path_graph(int n);
// cycle_graph(1) is a loop, cycle_graph(2) a parallel pair.
Pseudograph cycle_graph(int n);
// F_n: hub (vertex n) joined to every vertex of a path with n vertices.
Pseudograph fan_graph(int n);
// n-step ladder: P_n x K_2. Rails 0..n-1 and n..2n-1, rung i -- n+i.
Pseudograph ladder_graph(int n);
// Triangle strip on n+1 vertices: edges (i,i+1) and (i,i+2); s(Z_n) = f_{2n}.
Pseudograph zigzag_graph(int n);
// W_n: hub (vertex n) joined to every vertex of the cycle C_n.
Pseudograph wheel_graph(int n);
// Q_n: vertices are n-bit strings, adjacent iff they differ in one digit.
Pseudograph cube_graph(int n);
Pseudograph star_graph(int k);  // K_{1,k}, hub 0

// Dispatch by family name, e.g. make_family("fan", {3}).
Pseudograph make_family(const std::string& name, const std::vector<int>& params);

}  // namespace exgraph
