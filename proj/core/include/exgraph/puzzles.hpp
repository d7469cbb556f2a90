#pragma once

#include <string>
#include <vector>

#include "exgraph/graph.hpp"
#include "exgraph/numeric.hpp"

namespace exgraph {

// State-space graph of a river-crossing puzzle: vertices are the legal states
// reachable from the start, edges are single boat crossings labeled by cargo.
struct PuzzleGraph {
    Pseudograph graph{1};
    std::vector<std::string> state_names;
    std::vector<std::string> edge_labels;
    int start = 0;
    int goal = -1;  // -1 when the goal state was never reached
};

// Wolf, goat, and cabbage. States are written `wc||*g` style: left-bank
// contents, the river, then right-bank contents; `*` marks the farmer's side.
PuzzleGraph wolf_goat_cabbage();

// Missionaries and cannibals: m missionaries, c cannibals, boat capacity cap.
// States are written `4_4*||0_0`: cannibal count with missionary subscript
// per bank, `*` on the boat's side.
PuzzleGraph missionaries(int m, int c, int cap);

struct PuzzleSolutions {
    bool reachable = false;
    int shortest = -1;        // crossings on a shortest solution
    Int simple_path_count;    // start -> goal walks that repeat no state
};
PuzzleSolutions puzzle_solutions(const PuzzleGraph& g);

}  // namespace exgraph
