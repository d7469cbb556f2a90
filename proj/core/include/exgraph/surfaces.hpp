#pragma once

#include <optional>
#include <string>
#include <vector>

#include "exgraph/graph.hpp"

namespace exgraph {

// An edge-end (dart): 2*edge + side, side 0 at the edge's `a` endpoint and
// side 1 at `b`. A loop contributes both of its ends to one vertex.
inline int dart_of(int edge, int side) { return 2 * edge + side; }
inline int dart_edge(int dart) { return dart / 2; }
inline int dart_side(int dart) { return dart % 2; }
inline int dart_opposite(int dart) { return dart ^ 1; }

// Cyclic order of edge-ends at each vertex, encoding an orientable cellular
// drawing of the (connected) base graph.
struct RotationSystem {
    Pseudograph graph;
    std::vector<std::vector<int>> rotation;  // darts in cyclic order per vertex

    RotationSystem(Pseudograph g, std::vector<std::vector<int>> rot);  // validates
};

// Builds the rotation from per-vertex edge-index lists: an edge appears once
// per end at the vertex; for a loop the first occurrence is the `a`-end.
RotationSystem rotation_from_edge_lists(const Pseudograph& g,
                                        const std::vector<std::vector<int>>& edge_lists);
// Edge-ends in increasing edge order at every vertex.
RotationSystem default_rotation(const Pseudograph& g);
// Rotation for a simple graph given neighbor orders.
RotationSystem rotation_from_neighbor_lists(const Pseudograph& g,
                                            const std::vector<std::vector<int>>& neighbor_lists);
// The classical toroidal K_7 rotation: at vertex i the neighbors come in the
// order i+1, i+3, i+2, i+6, i+4, i+5 (mod 7); traces 14 triangular faces.
RotationSystem k7_torus_rotation();
// One vertex, two loops, ends interleaved a b a' b': the torus model with a
// single face.
RotationSystem torus_model_rotation();

struct FaceTrace {
    std::vector<std::vector<int>> faces;  // closed walks of leaving darts
    int count() const { return static_cast<int>(faces.size()); }
};
// From an edge-end, jump to the other end of the edge, then advance to the
// next end in that vertex's rotation. Every directed edge-side lies on
// exactly one face; face lengths sum to 2q.
FaceTrace trace_faces(const RotationSystem& rs);

struct EulerResult {
    int chi;    // p - q + r
    int genus;  // (2 - chi) / 2
};
EulerResult euler_genus(const RotationSystem& rs);

struct ToroidalCheck {
    bool q_le_3p = false;
    std::optional<bool> girth4_q_le_2p;  // set only when girth >= 4
    std::string verdict;                 // "possibly toroidal" | "not toroidal"
};
// Necessary conditions only: q <= 3p always, q <= 2p when girth >= 4.
ToroidalCheck toroidal_necessary(const Pseudograph& g);  // simple graphs

// Chromatic bound floor((7 + sqrt(1+48g))/2) by exact integer square root.
// Heawood's proof covers g >= 1; at g = 0 the value 4 is a coincidence.
int heawood_bound(int genus);

struct MinorStep {
    enum class Kind { delete_vertex, delete_edge, contract_edge };
    Kind kind;
    int index;  // vertex or edge index at the time the step applies
};
Pseudograph apply_minor_step(const Pseudograph& g, const MinorStep& step);
// Any pseudograph with a cycle reduces to the single-loop pseudograph by
// deletions and contractions; forests cannot reach it.
std::optional<std::vector<MinorStep>> loop_minor_chain(const Pseudograph& g);

}  // namespace exgraph
