#include "exgraph/io.hpp"

#include <fstream>
#include <sstream>

namespace exgraph {

namespace {

// Splits into whitespace tokens; empty for blank/comment lines.
std::vector<std::string> tokens_of(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    if (!out.empty() && out[0].starts_with('#')) out.clear();
    return out;
}

long parse_long(const std::string& tok, int line_no, const char* what) {
    size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError(line_no, std::string("expected ") + what + ", got '" + tok + "'");
    }
    if (pos != tok.size())
        throw ParseError(line_no, std::string("expected ") + what + ", got '" + tok + "'");
    return v;
}

struct RawFile {
    int p = 0;
    std::vector<Edge> edges;
    std::vector<Rat> weights;
    int weighted_lines = 0;
};

RawFile read_raw(std::istream& in) {
    RawFile raw;
    std::string line;
    int line_no = 0;
    bool have_header = false;
    long q = 0;
    long seen = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::vector<std::string> toks = tokens_of(line);
        if (toks.empty()) continue;
        if (!have_header) {
            if (toks.size() != 2) throw ParseError(line_no, "header must be `p q`");
            const long p = parse_long(toks[0], line_no, "vertex count");
            q = parse_long(toks[1], line_no, "edge count");
            if (p < 1) throw ParseError(line_no, "vertex count must be positive");
            if (q < 0) throw ParseError(line_no, "edge count must be nonnegative");
            raw.p = static_cast<int>(p);
            have_header = true;
            continue;
        }
        if (seen == q) throw ParseError(line_no, "more edges than the header promised");
        if (toks.size() != 2 && toks.size() != 3)
            throw ParseError(line_no, "edge line must be `a b` or `a b weight`");
        const long a = parse_long(toks[0], line_no, "vertex index");
        const long b = parse_long(toks[1], line_no, "vertex index");
        if (a < 0 || a >= raw.p || b < 0 || b >= raw.p)
            throw ParseError(line_no, "vertex index out of range");
        raw.edges.push_back({static_cast<int>(a), static_cast<int>(b)});
        if (toks.size() == 3) {
            try {
                raw.weights.push_back(parse_rational(toks[2]));
            } catch (const std::exception& ex) {
                throw ParseError(line_no, ex.what());
            }
            ++raw.weighted_lines;
        } else {
            raw.weights.emplace_back(0);
        }
        ++seen;
    }
    if (!have_header) throw ParseError(line_no == 0 ? 1 : line_no, "missing `p q` header");
    if (seen != q) throw ParseError(line_no, "fewer edges than the header promised");
    if (raw.weighted_lines != 0 && raw.weighted_lines != static_cast<int>(raw.edges.size()))
        throw ParseError(line_no, "either all edges carry weights or none do");
    return raw;
}

}  // namespace

Rat parse_rational(const std::string& token) {
    Rat r;
    if (r.set_str(token, 10) != 0)
        throw std::invalid_argument("malformed rational '" + token + "'");
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + token + "'");
    r.canonicalize();
    return r;
}

WeightedGraph EdgeListFile::weighted_graph() const {
    if (!weighted()) throw std::invalid_argument("file carries no weights");
    return WeightedGraph(graph, weights);
}

EdgeListFile read_edge_list(std::istream& in) {
    RawFile raw = read_raw(in);
    EdgeListFile out{Pseudograph(raw.p, std::move(raw.edges)), {}};
    if (raw.weighted_lines > 0) out.weights = std::move(raw.weights);
    return out;
}

EdgeListFile read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return read_edge_list(in);
}

Digraph read_arc_list(std::istream& in) {
    RawFile raw = read_raw(in);
    return Digraph(raw.p, std::move(raw.edges));
}

Digraph read_arc_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return read_arc_list(in);
}

std::string format_edge_list(const Pseudograph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.a << ' ' << e.b << '\n';
    return out.str();
}

std::string format_edge_list(const WeightedGraph& g) {
    std::ostringstream out;
    out << g.graph.vertex_count() << ' ' << g.graph.edge_count() << '\n';
    for (int e = 0; e < g.graph.edge_count(); ++e)
        out << g.graph.edge(e).a << ' ' << g.graph.edge(e).b << ' ' << to_string(g.weights[e])
            << '\n';
    return out.str();
}

std::vector<std::vector<int>> read_rotation_lists(std::istream& in, const Pseudograph& g) {
    std::vector<std::vector<int>> rows;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::vector<std::string> toks = tokens_of(line);
        if (toks.empty()) continue;
        if (static_cast<int>(rows.size()) == g.vertex_count())
            throw ParseError(line_no, "more rotation lines than vertices");
        std::vector<int> row;
        for (const std::string& t : toks) {
            const long e = parse_long(t, line_no, "edge index");
            if (e < 0 || e >= g.edge_count()) throw ParseError(line_no, "edge index out of range");
            row.push_back(static_cast<int>(e));
        }
        rows.push_back(std::move(row));
    }
    if (static_cast<int>(rows.size()) != g.vertex_count())
        throw ParseError(line_no == 0 ? 1 : line_no, "one rotation line per vertex required");
    return rows;
}

std::vector<std::vector<int>> read_rotation_file(const std::string& path, const Pseudograph& g) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return read_rotation_lists(in, g);
}

}  // namespace exgraph
