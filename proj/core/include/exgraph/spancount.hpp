#pragma once

#include <functional>
#include <vector>

#include "exgraph/graph.hpp"
#include "exgraph/numeric.hpp"

namespace exgraph {

// Laplacian with the last row and column deleted; diagonal holds loopless
// degrees, entry (i,j) is -(number of edges between i and j). Every column
// sum is nonnegative.
struct KirchhoffMinor {
    int n = 0;                        // (p-1) x (p-1)
    std::vector<std::vector<Int>> entries;
};

// Enumerates the spanning trees of g as sets of edge indices (loops are
// skipped; indices refer to g's edge list). Guard: at most `max_edges`
// non-loop edges. Enumeration order is deterministic.
void for_each_spanning_tree(const Pseudograph& g,
                            const std::function<void(const std::vector<int>&)>& visit,
                            int max_edges = 24);

// Oracle for the other two counters: counts edge subsets of size p-1 forming
// a connected spanning acyclic subgraph. 0 if disconnected; 1 for the
// single-vertex graph (the empty tree spans it).
Int count_trees_bruteforce(const Pseudograph& g, int max_edges = 24);

// Deletion-plus-contraction recursion s(G) = s(G-e) + s(G/e) with the usual
// simplifications: loops dropped, end vertices stripped, products across
// bridges, two-vertex base case. Memoized per call on a degree-sorted edge
// multiset key.
Int count_trees_dpc(const Pseudograph& g);

KirchhoffMinor kirchhoff_minor(const Pseudograph& g);  // requires p >= 2

// Full Kirchhoff matrix A' (all row/column sums vanish); used by tests.
std::vector<std::vector<Int>> kirchhoff_matrix(const Pseudograph& g);

// Exact determinant by fraction-free (Bareiss) elimination; row swaps flip
// the sign.
Int det_exact(std::vector<std::vector<Int>> m);

// s(G) = det M. The single-vertex graph counts 1 by convention.
Int count_trees_matrix(const Pseudograph& g);

// --- closed forms from the text ---

Int cayley_trees(int p);               // s(K_p) = p^{p-2}
Int complete_minus_edge_trees(int p);  // s(K_p - e) = (p-2) * p^{p-3}, p >= 3
Int fan_trees(int n);                  // s(F_n) = f_{2n}
Int zigzag_trees(int n);               // s(Z_n) = f_{2n}
Int ladder_trees(int n);               // b_{n+1} = 4 b_n - b_{n-1}; 1, 4, 15, 56, ...
Int wheel_trees(int n);                // s(W_n) = l_{2n} - 2

}  // namespace exgraph
