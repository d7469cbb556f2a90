#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "exgraph/graph.hpp"

namespace exgraph {

struct ParseError : std::runtime_error {
    ParseError(int line_no, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
    int line;
};

// Edge-list text format, the interchange contract for all modules:
//   line 1: `p q`
//   then q lines `a b [weight]` with 0-based vertex indices; `a a` is a loop;
//   the optional third token is an integer or `num/den` rational weight.
// Lines starting with `#` are comments.
struct EdgeListFile {
    Pseudograph graph;
    std::vector<Rat> weights;  // empty when the file carries no weights

    bool weighted() const { return !weights.empty(); }
    WeightedGraph weighted_graph() const;
};

EdgeListFile read_edge_list(std::istream& in);
EdgeListFile read_edge_list_file(const std::string& path);

// The same lines read as arcs `source target`.
Digraph read_arc_list(std::istream& in);
Digraph read_arc_list_file(const std::string& path);

std::string format_edge_list(const Pseudograph& g);
std::string format_edge_list(const WeightedGraph& g);

// Rotation file: one line per vertex listing edge indices in cyclic order.
// An edge appears once per end it has at the vertex (a loop appears twice);
// for a loop, the first occurrence on the line is the edge's `a`-end.
std::vector<std::vector<int>> read_rotation_lists(std::istream& in, const Pseudograph& g);
std::vector<std::vector<int>> read_rotation_file(const std::string& path, const Pseudograph& g);

Rat parse_rational(const std::string& token);  // integer or num/den

}  // namespace exgraph
