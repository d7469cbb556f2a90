// Command-line front end: every module's operations over the edge-list
// format. Plain-text line output by default; --json emits one object.

#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "exgraph/egf.hpp"
#include "exgraph/graph.hpp"
#include "exgraph/io.hpp"
#include "exgraph/matchflow.hpp"
#include "exgraph/mst.hpp"
#include "exgraph/polynomials.hpp"
#include "exgraph/puzzles.hpp"
#include "exgraph/rado.hpp"
#include "exgraph/ramsey.hpp"
#include "exgraph/spancount.hpp"
#include "exgraph/surfaces.hpp"

namespace {

using exgraph::Int;
using exgraph::Rat;
using nlohmann::json;

struct Output {
    bool as_json = false;
    std::ostringstream text;
    json object;

    void field(const std::string& key, const json& value) { object[key] = value; }
    void flush() {
        if (as_json)
            std::cout << object.dump() << '\n';
        else
            std::cout << text.str();
    }
};

std::string join(const std::vector<std::string>& parts, const char* sep = " ") {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::vector<std::string> int_strings(const std::vector<Int>& values) {
    std::vector<std::string> out;
    for (const Int& v : values) out.push_back(v.get_str());
    return out;
}

std::vector<std::string> index_strings(const std::vector<int>& values) {
    std::vector<std::string> out;
    for (int v : values) out.push_back(std::to_string(v));
    return out;
}

std::string poly_line(const exgraph::IntPolynomial& p) { return p.str(); }

// Multivariate polynomial as `e1,...,ep:c` lines in term order.
std::vector<std::string> multipoly_lines(const exgraph::MultiPolynomial& m) {
    std::vector<std::string> lines;
    for (const auto& [exps, c] : m.terms()) {
        std::string line;
        for (size_t i = 0; i < exps.size(); ++i) {
            if (i) line += ',';
            line += std::to_string(exps[i]);
        }
        line += ':';
        line += c.get_str();
        lines.push_back(line);
    }
    return lines;
}

exgraph::WeightedGraph weighted_or_unit(const exgraph::EdgeListFile& file) {
    if (file.weighted()) return file.weighted_graph();
    return exgraph::WeightedGraph(file.graph,
                                  std::vector<Rat>(file.graph.edge_count(), Rat(1)));
}

std::set<int> parse_chords(const std::string& csv) {
    std::set<int> out;
    std::istringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.insert(std::stoi(item));
    return out;
}

std::vector<Int> parse_labels(const std::string& csv) {
    std::vector<Int> out;
    std::istringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.emplace_back(item);
    return out;
}

std::string dart_name(int dart) {
    return std::to_string(exgraph::dart_edge(dart)) + (exgraph::dart_side(dart) == 0 ? "a" : "b");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact graph-theory computations over edge-list files"};
    app.require_subcommand(1);
    Output out;
    app.add_flag("--json", out.as_json, "emit one JSON object instead of text lines");
    std::function<void()> action;

    // ---- trees ----
    {
        auto* cmd = app.add_subcommand("trees", "count spanning trees");
        auto file = std::make_shared<std::string>();
        auto method = std::make_shared<std::string>("matrix");
        cmd->add_option("file", *file, "edge-list file")->required();
        cmd->add_option("--method", *method, "brute|dpc|matrix")
            ->check(CLI::IsMember({"brute", "dpc", "matrix"}));
        cmd->callback([&, file, method] {
            action = [&, file, method] {
                const auto parsed = exgraph::read_edge_list_file(*file);
                Int count;
                if (*method == "brute")
                    count = exgraph::count_trees_bruteforce(parsed.graph);
                else if (*method == "dpc")
                    count = exgraph::count_trees_dpc(parsed.graph);
                else
                    count = exgraph::count_trees_matrix(parsed.graph);
                out.text << count.get_str() << '\n';
                out.field("count", count.get_str());
                out.field("method", *method);
            };
        });
    }

    // ---- chromatic / matchpoly / treepoly ----
    {
        auto* cmd = app.add_subcommand("chromatic", "chromatic polynomial coefficients");
        auto file = std::make_shared<std::string>();
        cmd->add_option("file", *file)->required();
        cmd->callback([&, file] {
            action = [&, file] {
                const auto p =
                    exgraph::chromatic_polynomial(exgraph::read_edge_list_file(*file).graph);
                out.text << poly_line(p) << '\n';
                out.field("coefficients", int_strings(p.coefficients()));
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("matchpoly", "matching polynomial coefficients");
        auto file = std::make_shared<std::string>();
        cmd->add_option("file", *file)->required();
        cmd->callback([&, file] {
            action = [&, file] {
                const auto p =
                    exgraph::matching_polynomial(exgraph::read_edge_list_file(*file).graph);
                out.text << poly_line(p) << '\n';
                out.field("coefficients", int_strings(p.coefficients()));
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("treepoly", "spanning-tree polynomial terms");
        auto file = std::make_shared<std::string>();
        cmd->add_option("file", *file)->required();
        cmd->callback([&, file] {
            action = [&, file] {
                const auto s =
                    exgraph::spanning_tree_polynomial(exgraph::read_edge_list_file(*file).graph);
                for (const std::string& line : multipoly_lines(s)) out.text << line << '\n';
                out.field("terms", multipoly_lines(s));
            };
        });
    }

    // ---- egf ----
    {
        auto* cmd = app.add_subcommand("egf", "labeled counting sequences");
        auto kind = std::make_shared<std::string>();
        auto n = std::make_shared<int>(0);
        cmd->add_option("kind", *kind,
                        "perfect_matchings|all_matchings|two_factors|spanning_forests|"
                        "connected_subgraphs|hamiltonian_cycles")
            ->required();
        cmd->add_option("n", *n, "horizon")->required();
        cmd->callback([&, kind, n] {
            action = [&, kind, n] {
                const auto seq = exgraph::named_count_sequence(*kind, *n);
                out.text << join(int_strings(seq)) << '\n';
                out.field("kind", *kind);
                out.field("values", int_strings(seq));
            };
        });
    }

    // ---- ramsey ----
    {
        auto* ram = app.add_subcommand("ramsey", "colorings, bounds, and verifications");
        ram->require_subcommand(1);
        {
            auto* cmd = ram->add_subcommand("verify33", "exhaustive proof that r(3,3) = 6");
            cmd->callback([&] {
                action = [&] {
                    const bool ok = exgraph::verify_ramsey_value(3, 3);
                    out.text << "checked 32768 colorings of K6: "
                             << (ok ? "all contain a monochromatic triangle" : "FAILED") << '\n';
                    out.text << "pentagon witness (chords {1}): no monochromatic triangle\n";
                    out.text << "r(3,3) = 6: " << (ok ? "verified" : "refuted") << '\n';
                    out.field("verified", ok);
                };
            });
        }
        {
            auto* cmd = ram->add_subcommand("circulant", "chord-class coloring of K_n");
            auto n = std::make_shared<int>(0);
            auto chords = std::make_shared<std::string>();
            cmd->add_option("n", *n)->required();
            cmd->add_option("chords", *chords, "comma-separated red chord lengths")->required();
            cmd->callback([&, n, chords] {
                action = [&, n, chords] {
                    const std::set<int> red = parse_chords(*chords);
                    const auto coloring = exgraph::circulant_coloring(*n, red);
                    std::vector<std::string> red_s, blue_s;
                    for (int c = 1; c <= *n / 2; ++c)
                        (red.count(c) ? red_s : blue_s).push_back(std::to_string(c));
                    out.text << "n: " << *n << '\n';
                    out.text << "red chords: " << join(red_s) << '\n';
                    out.text << "blue chords: " << join(blue_s) << '\n';
                    for (int k = 3; k <= 4 && k <= *n; ++k) {
                        const bool red_k =
                            exgraph::has_mono_clique(coloring, k, exgraph::EdgeColor::red).found;
                        const bool blue_k =
                            exgraph::has_mono_clique(coloring, k, exgraph::EdgeColor::blue).found;
                        out.text << "mono K" << k << " red: " << (red_k ? "yes" : "no") << '\n';
                        out.text << "mono K" << k << " blue: " << (blue_k ? "yes" : "no") << '\n';
                        out.field("mono_K" + std::to_string(k) + "_red", red_k);
                        out.field("mono_K" + std::to_string(k) + "_blue", blue_k);
                    }
                    out.field("n", *n);
                    out.field("red_chords", red_s);
                    out.field("blue_chords", blue_s);
                };
            });
        }
        {
            auto* cmd = ram->add_subcommand("bounds", "s-table and probabilistic bounds");
            auto m = std::make_shared<int>(0);
            auto n = std::make_shared<int>(0);
            cmd->add_option("m", *m)->required();
            cmd->add_option("n", *n)->required();
            cmd->callback([&, m, n] {
                action = [&, m, n] {
                    const Int s = exgraph::ramsey_s(*m, *n);
                    out.text << "s(" << *m << "," << *n << ") = " << s.get_str() << '\n';
                    out.field("s", s.get_str());
                    const auto known = exgraph::ramsey_r_known(*m, *n);
                    if (known) {
                        out.text << "r(" << *m << "," << *n << ") = " << *known << '\n';
                        out.field("r_known", *known);
                    } else {
                        out.text << "r(" << *m << "," << *n << ") unknown\n";
                        out.field("r_known", nullptr);
                    }
                    if (*m == *n) {
                        const auto b = exgraph::bound_values(*m, *n);
                        out.text << "upper 4^n/4: " << b.upper_4n.get_str() << '\n';
                        out.text << "lower floor(2^(n/2)/8): " << b.lower_2n2_floor.get_str()
                                 << '\n';
                        out.text << "W(R=n): " << exgraph::to_string(b.expected_mono) << '\n';
                        out.field("upper_4n", b.upper_4n.get_str());
                        out.field("lower_2n2_floor", b.lower_2n2_floor.get_str());
                        out.field("expected_mono", exgraph::to_string(b.expected_mono));
                    }
                };
            });
        }
        {
            auto* cmd = ram->add_subcommand("cointail", "exact tail probability P_n");
            auto n = std::make_shared<int>(0);
            cmd->add_option("n", *n)->required();
            cmd->callback([&, n] {
                action = [&, n] {
                    const Rat p = exgraph::coin_tail(*n);
                    const bool ok = exgraph::markov_bound_check(*n);
                    out.text << "P_" << *n << " = " << exgraph::to_string(p) << '\n';
                    out.text << "P_" << *n << " < (19/20)^" << *n << ": " << (ok ? "yes" : "no")
                             << '\n';
                    out.field("p", exgraph::to_string(p));
                    out.field("under_bound", ok);
                };
            });
        }
    }

    // ---- mst / tsp-nn ----
    {
        auto* cmd = app.add_subcommand("mst", "minimum spanning tree");
        auto file = std::make_shared<std::string>();
        auto algo = std::make_shared<std::string>("kruskal");
        cmd->add_option("file", *file)->required();
        cmd->add_option("--algo", *algo, "kruskal|prim|boruvka|rdelete")
            ->check(CLI::IsMember({"kruskal", "prim", "boruvka", "rdelete"}));
        cmd->callback([&, file, algo] {
            action = [&, file, algo] {
                const auto g = weighted_or_unit(exgraph::read_edge_list_file(*file));
                exgraph::SpanningForest tree;
                if (*algo == "kruskal")
                    tree = exgraph::kruskal(g);
                else if (*algo == "prim")
                    tree = exgraph::prim(g, 0);
                else if (*algo == "boruvka")
                    tree = exgraph::boruvka(g);
                else
                    tree = exgraph::reverse_delete(g);
                out.text << "edges: " << join(index_strings(tree.edges)) << '\n';
                out.text << "weight: " << exgraph::to_string(tree.weight) << '\n';
                out.field("edges", tree.edges);
                out.field("weight", exgraph::to_string(tree.weight));
                out.field("spanning_tree", tree.spanning_tree);
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("tsp-nn", "nearest-neighbor Hamiltonian cycle");
        auto file = std::make_shared<std::string>();
        auto start = std::make_shared<int>(0);
        cmd->add_option("file", *file)->required();
        cmd->add_option("--start", *start, "starting vertex")->required();
        cmd->callback([&, file, start] {
            action = [&, file, start] {
                const auto g = weighted_or_unit(exgraph::read_edge_list_file(*file));
                const auto tour = exgraph::nearest_neighbor_cycle(g, *start);
                out.text << "tour: " << join(index_strings(tour.vertices)) << '\n';
                out.text << "weight: " << exgraph::to_string(tour.weight) << '\n';
                out.field("tour", tour.vertices);
                out.field("weight", exgraph::to_string(tour.weight));
            };
        });
    }

    // ---- matching / vcover / ecover / mincut ----
    {
        auto* cmd = app.add_subcommand("matching", "maximum bipartite matching");
        auto file = std::make_shared<std::string>();
        auto parts = std::make_shared<int>(0);
        cmd->add_option("file", *file)->required();
        cmd->add_option("--parts", *parts, "first k vertices form the left part")->required();
        cmd->callback([&, file, parts] {
            action = [&, file, parts] {
                const exgraph::Bigraph g(exgraph::read_edge_list_file(*file).graph, *parts);
                const auto m = exgraph::max_matching(g);
                out.text << "size: " << m.size() << '\n';
                out.text << "edges: " << join(index_strings(m.edges)) << '\n';
                out.field("size", m.size());
                out.field("edges", m.edges);
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("vcover", "minimum vertex cover of a bigraph");
        auto file = std::make_shared<std::string>();
        cmd->add_option("file", *file)->required();
        cmd->callback([&, file] {
            action = [&, file] {
                const auto parsed = exgraph::read_edge_list_file(*file);
                // Infer a bipartition, then relabel left-first for Koenig.
                const auto parts = exgraph::bipartition(parsed.graph);
                if (!parts.bipartite) throw std::domain_error("graph is not bipartite");
                std::vector<int> order;  // new index -> old vertex
                for (int v = 0; v < parsed.graph.vertex_count(); ++v)
                    if (parts.side[v] == 0) order.push_back(v);
                const int left = static_cast<int>(order.size());
                for (int v = 0; v < parsed.graph.vertex_count(); ++v)
                    if (parts.side[v] == 1) order.push_back(v);
                std::vector<int> new_of_old(parsed.graph.vertex_count());
                for (int i = 0; i < static_cast<int>(order.size()); ++i) new_of_old[order[i]] = i;
                std::vector<exgraph::Edge> edges;
                for (const exgraph::Edge& e : parsed.graph.edges())
                    edges.push_back({new_of_old[e.a], new_of_old[e.b]});
                const exgraph::Bigraph g(
                    exgraph::Pseudograph(parsed.graph.vertex_count(), edges), left);
                std::vector<int> cover = exgraph::min_vertex_cover(g);
                for (int& v : cover) v = order[v];  // back to input labels
                std::sort(cover.begin(), cover.end());
                out.text << "size: " << cover.size() << '\n';
                out.text << "vertices: " << join(index_strings(cover)) << '\n';
                out.field("size", cover.size());
                out.field("vertices", cover);
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("ecover", "minimum edge cover");
        auto file = std::make_shared<std::string>();
        cmd->add_option("file", *file)->required();
        cmd->callback([&, file] {
            action = [&, file] {
                const auto cover =
                    exgraph::min_edge_cover(exgraph::read_edge_list_file(*file).graph);
                out.text << "size: " << cover.size() << '\n';
                out.text << "edges: " << join(index_strings(cover)) << '\n';
                out.field("size", cover.size());
                out.field("edges", cover);
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("mincut", "edge-disjoint paths and min cut");
        auto file = std::make_shared<std::string>();
        auto s = std::make_shared<int>(0);
        auto t = std::make_shared<int>(0);
        cmd->add_option("file", *file, "arc-list file (each line one arc)")->required();
        cmd->add_option("--s", *s, "source")->required();
        cmd->add_option("--t", *t, "sink")->required();
        cmd->callback([&, file, s, t] {
            action = [&, file, s, t] {
                const auto d = exgraph::read_arc_list_file(*file);
                const auto pc = exgraph::edge_disjoint_paths(d, *s, *t);
                out.text << "paths: " << pc.paths.size() << '\n';
                for (const auto& path : pc.paths)
                    out.text << "path: " << join(index_strings(path)) << '\n';
                out.text << "cut: " << join(index_strings(pc.cut)) << '\n';
                out.field("paths", pc.paths);
                out.field("cut", pc.cut);
            };
        });
    }

    // ---- faces / heawood / torcheck ----
    {
        auto* cmd = app.add_subcommand("faces", "face tracing of a rotation system");
        auto file = std::make_shared<std::string>();
        auto rot = std::make_shared<std::string>();
        cmd->add_option("file", *file)->required();
        cmd->add_option("--rot", *rot, "rotation file: one line of edge indices per vertex")
            ->required();
        cmd->callback([&, file, rot] {
            action = [&, file, rot] {
                const auto parsed = exgraph::read_edge_list_file(*file);
                const auto lists = exgraph::read_rotation_file(*rot, parsed.graph);
                const auto rs = exgraph::rotation_from_edge_lists(parsed.graph, lists);
                const auto faces = exgraph::trace_faces(rs);
                const auto euler = exgraph::euler_genus(rs);
                out.text << "faces: " << faces.count() << '\n';
                std::vector<std::vector<std::string>> named;
                for (const auto& face : faces.faces) {
                    std::vector<std::string> walk;
                    for (int dart : face) walk.push_back(dart_name(dart));
                    out.text << "face: " << join(walk) << '\n';
                    named.push_back(walk);
                }
                out.text << "chi: " << euler.chi << '\n';
                out.text << "genus: " << euler.genus << '\n';
                out.field("faces", named);
                out.field("chi", euler.chi);
                out.field("genus", euler.genus);
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("heawood", "Heawood chromatic bound for genus g");
        auto genus = std::make_shared<int>(0);
        cmd->add_option("g", *genus)->required();
        cmd->callback([&, genus] {
            action = [&, genus] {
                const int bound = exgraph::heawood_bound(*genus);
                out.text << bound << '\n';
                out.field("bound", bound);
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("torcheck", "necessary toroidality bounds");
        auto file = std::make_shared<std::string>();
        cmd->add_option("file", *file)->required();
        cmd->callback([&, file] {
            action = [&, file] {
                const auto g = exgraph::read_edge_list_file(*file).graph;
                const auto check = exgraph::toroidal_necessary(g);
                out.text << "q <= 3p: " << (check.q_le_3p ? "yes" : "no") << '\n';
                if (check.girth4_q_le_2p.has_value())
                    out.text << "girth>=4 q <= 2p: " << (*check.girth4_q_le_2p ? "yes" : "no")
                             << '\n';
                else
                    out.text << "girth>=4 q <= 2p: n/a\n";
                out.text << "verdict: " << check.verdict << '\n';
                out.field("q_le_3p", check.q_le_3p);
                if (check.girth4_q_le_2p.has_value())
                    out.field("girth4_q_le_2p", *check.girth4_q_le_2p);
                else
                    out.field("girth4_q_le_2p", nullptr);
                out.field("verdict", check.verdict);
            };
        });
    }

    // ---- rado / gnp ----
    {
        auto* rado = app.add_subcommand("rado", "the BIT-predicate Rado graph");
        rado->require_subcommand(1);
        {
            auto* cmd = rado->add_subcommand("adj", "adjacency of two labels");
            auto i = std::make_shared<std::string>();
            auto j = std::make_shared<std::string>();
            cmd->add_option("i", *i)->required();
            cmd->add_option("j", *j)->required();
            cmd->callback([&, i, j] {
                action = [&, i, j] {
                    const bool adj = exgraph::bit_adjacent(Int(*i), Int(*j));
                    out.text << (adj ? "true" : "false") << '\n';
                    out.field("adjacent", adj);
                };
            });
        }
        {
            auto* cmd = rado->add_subcommand("witness", "vertex joined to V, avoiding W");
            auto v = std::make_shared<std::string>();
            auto w = std::make_shared<std::string>();
            cmd->add_option("--v", *v, "comma-separated labels");
            cmd->add_option("--w", *w, "comma-separated labels");
            cmd->callback([&, v, w] {
                action = [&, v, w] {
                    const Int x = exgraph::rado_witness(parse_labels(*v), parse_labels(*w));
                    out.text << x.get_str() << '\n';
                    out.field("witness", x.get_str());
                };
            });
        }
        {
            auto* cmd = rado->add_subcommand("embed", "induced embedding of a graph");
            auto file = std::make_shared<std::string>();
            cmd->add_option("file", *file)->required();
            cmd->callback([&, file] {
                action = [&, file] {
                    const auto labels =
                        exgraph::embed_induced(exgraph::read_edge_list_file(*file).graph);
                    out.text << join(int_strings(labels)) << '\n';
                    out.field("labels", int_strings(labels));
                };
            });
        }
    }
    {
        auto* cmd = app.add_subcommand("gnp", "seeded G(n,p) sample in edge-list format");
        auto n = std::make_shared<int>(0);
        auto p = std::make_shared<std::string>();
        auto seed = std::make_shared<uint64_t>(0);
        cmd->add_option("n", *n)->required();
        cmd->add_option("p", *p, "rational probability, e.g. 1/2")->required();
        cmd->add_option("seed", *seed)->required();
        cmd->callback([&, n, p, seed] {
            action = [&, n, p, seed] {
                const auto sample = exgraph::gnp_sample(*n, exgraph::parse_rational(*p), *seed);
                out.text << exgraph::format_edge_list(sample.graph);
                std::vector<std::vector<int>> edges;
                for (const exgraph::Edge& e : sample.graph.edges()) edges.push_back({e.a, e.b});
                out.field("n", *n);
                out.field("seed", *seed);
                out.field("edges", edges);
            };
        });
    }

    // ---- puzzles ----
    {
        auto* puzzle = app.add_subcommand("puzzle", "river-crossing state graphs");
        puzzle->require_subcommand(1);
        auto emit = [&](const exgraph::PuzzleGraph& g) {
            const auto sol = exgraph::puzzle_solutions(g);
            out.text << "states: " << g.graph.vertex_count() << '\n';
            out.text << "start: " << g.state_names[g.start] << '\n';
            out.text << "goal: " << (g.goal >= 0 ? g.state_names[g.goal] : "unreachable") << '\n';
            for (int e = 0; e < g.graph.edge_count(); ++e)
                out.text << "edge: " << g.state_names[g.graph.edge(e).a] << ' '
                         << g.state_names[g.graph.edge(e).b] << ' ' << g.edge_labels[e] << '\n';
            if (sol.reachable) {
                out.text << "shortest: " << sol.shortest << '\n';
                out.text << "solutions: " << sol.simple_path_count.get_str() << '\n';
            } else {
                out.text << "shortest: unreachable\n";
                out.text << "solutions: 0\n";
            }
            out.field("states", g.graph.vertex_count());
            out.field("reachable", sol.reachable);
            out.field("shortest", sol.reachable ? json(sol.shortest) : json(nullptr));
            out.field("solutions", sol.simple_path_count.get_str());
        };
        {
            auto* cmd = puzzle->add_subcommand("wgc", "wolf, goat, and cabbage");
            cmd->callback([&, emit] { action = [&, emit] { emit(exgraph::wolf_goat_cabbage()); }; });
        }
        {
            auto* cmd = puzzle->add_subcommand("mc", "missionaries and cannibals");
            auto m = std::make_shared<int>(0);
            auto c = std::make_shared<int>(0);
            auto cap = std::make_shared<int>(0);
            cmd->add_option("m", *m, "missionaries")->required();
            cmd->add_option("c", *c, "cannibals")->required();
            cmd->add_option("cap", *cap, "boat capacity")->required();
            cmd->callback([&, emit, m, c, cap] {
                action = [&, emit, m, c, cap] { emit(exgraph::missionaries(*m, *c, *cap)); };
            });
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;  // usage error
    }

    try {
        action();
        out.flush();
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 1;  // domain error
    }
    return 0;
}
