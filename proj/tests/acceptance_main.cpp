// Acceptance suite: one pass/fail line per criterion, exact tolerances.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

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
#include "support/oracles.hpp"

using namespace exgraph;

namespace {

int failures = 0;

void require(bool condition, const std::string& detail) {
    if (!condition) throw std::runtime_error(detail);
}

void criterion(int number, const std::string& name, const std::function<void()>& body) {
    const auto start = std::chrono::steady_clock::now();
    try {
        body();
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        std::cout << "PASS criterion " << number << ": " << name << " (" << ms << " ms)\n";
    } catch (const std::exception& ex) {
        ++failures;
        std::cout << "FAIL criterion " << number << ": " << name << " -- " << ex.what() << "\n";
    }
}

Pseudograph random_connected(uint64_t seed, int max_vertices, int max_edges) {
    oracle::RandomGraphSpec spec;
    spec.max_vertices = max_vertices;
    spec.max_edges = max_edges;
    spec.require_connected = true;
    return oracle::random_pseudograph(seed, spec);
}

std::string run_cli(const std::string& args) {
    const std::string command = std::string(EXGRAPH_CLI_PATH) + " " + args;
    FILE* pipe = popen(command.c_str(), "r");
    require(pipe != nullptr, "failed to launch the CLI");
    std::string output;
    std::array<char, 4096> buffer;
    size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        output.append(buffer.data(), got);
    const int status = pclose(pipe);
    require(WIFEXITED(status) && WEXITSTATUS(status) == 0, "CLI exited nonzero for: " + args);
    return output;
}

}  // namespace

int main() {
    criterion(1, "spanning-tree three-way agreement on 500 seeded pseudographs", [] {
        int done = 0;
        for (uint64_t seed = 0; done < 500; ++seed) {
            const Pseudograph g = random_connected(seed, 7, 14);
            ++done;
            const Int brute = count_trees_bruteforce(g);
            const Int dpc = count_trees_dpc(g);
            require(brute == dpc, "dpc disagrees at seed " + std::to_string(seed));
            if (g.vertex_count() >= 2)
                require(brute == count_trees_matrix(g),
                        "matrix disagrees at seed " + std::to_string(seed));
        }
    });

    criterion(2, "spanning-tree closed forms (Cayley, K_{m,n}, fans, zigzags, ladders, wheels)",
              [] {
        for (int p = 2; p <= 9; ++p)
            require(count_trees_matrix(complete_graph(p)) == cayley_trees(p),
                    "Cayley fails at p=" + std::to_string(p));
        for (int m = 1; m <= 4; ++m)
            for (int n = 1; n <= 4; ++n)
                require(count_trees_matrix(complete_bipartite(m, n)) ==
                            pow_int(Int(m), n - 1) * pow_int(Int(n), m - 1),
                        "bipartite formula fails");
        for (int n = 1; n <= 8; ++n) {
            require(count_trees_matrix(fan_graph(n)) == fibonacci(2 * n), "fan fails");
            require(count_trees_matrix(zigzag_graph(n)) == fibonacci(2 * n), "zigzag fails");
        }
        const long ladder_seq[] = {1, 4, 15, 56, 209, 780, 2911};
        for (int n = 1; n <= 7; ++n) {
            require(ladder_trees(n) == ladder_seq[n - 1], "ladder recurrence fails");
            require(count_trees_matrix(ladder_graph(n)) == ladder_seq[n - 1],
                    "ladder count fails");
        }
        for (int n = 3; n <= 7; ++n)
            require(count_trees_matrix(wheel_graph(n)) == lucas(2 * n) - 2,
                    "wheel fails at n=" + std::to_string(n));
    });

    criterion(3, "determinant worked example and det A' = 0", [] {
        std::vector<std::vector<Int>> m(4, std::vector<Int>(4, Int(-1)));
        for (int i = 0; i < 4; ++i) m[i][i] = 4;
        require(det_exact(m) == 125, "4x4 example is not 5^3");
        for (uint64_t seed = 0; seed < 50; ++seed) {
            const Pseudograph g = random_connected(seed, 7, 12);
            if (g.vertex_count() < 2) continue;
            require(det_exact(kirchhoff_matrix(g)) == 0, "det A' nonzero");
        }
    });

    criterion(4, "chromatic closed forms and brute-force evaluation", [] {
        for (int n = 1; n <= 7; ++n) {
            require(chromatic_polynomial(complete_graph(n)) == chromatic_family("complete", n),
                    "K_p chromatic");
            require(chromatic_polynomial(path_graph(n)) == chromatic_family("tree", n),
                    "tree chromatic");
            require(chromatic_polynomial(fan_graph(n)) == chromatic_family("fan", n),
                    "fan chromatic");
            require(chromatic_polynomial(ladder_graph(n)) == chromatic_family("ladder", n),
                    "ladder chromatic");
            if (n >= 3)
                require(chromatic_polynomial(cycle_graph(n)) == chromatic_family("cycle", n),
                        "cycle chromatic");
        }
        for (uint64_t seed = 0; seed < 30; ++seed) {
            oracle::RandomGraphSpec spec;
            spec.max_vertices = 6;
            spec.max_edges = 10;
            const Pseudograph g = oracle::random_pseudograph(seed, spec);
            const IntPolynomial p = chromatic_polynomial(g);
            for (int x = 0; x <= 4; ++x)
                require(p.evaluate(x) == oracle::proper_coloring_count(g, x),
                        "coloring count mismatch");
        }
    });

    criterion(5, "matching polynomial recursion and exhaustive counts", [] {
        const IntPolynomial x = IntPolynomial::x_power(1);
        for (int n = 2; n <= 8; ++n) {
            const IntPolynomial lhs = matching_polynomial(complete_graph(n + 1));
            const IntPolynomial rhs =
                matching_polynomial(complete_graph(n)) +
                IntPolynomial::constant(n) * x * matching_polynomial(complete_graph(n - 1));
            require(lhs == rhs, "K-recursion fails at n=" + std::to_string(n));
        }
        for (uint64_t seed = 0; seed < 30; ++seed) {
            oracle::RandomGraphSpec spec;
            spec.max_vertices = 7;
            spec.max_edges = 11;
            spec.allow_loops = false;
            const Pseudograph g = oracle::random_pseudograph(seed, spec);
            const std::vector<Int> counts = oracle::matching_counts(g);
            const IntPolynomial m = matching_polynomial(g);
            for (size_t i = 0; i < counts.size(); ++i)
                require(m.coeff(static_cast<int>(i)) == counts[i], "matching count mismatch");
        }
    });

    criterion(6, "spanning-tree polynomial: worked example, S_{K_p}, degree-k counts", [] {
        const Pseudograph g(6, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {0, 4}, {2, 5}});
        MultiPolynomial expected(6);
        expected.add_term({2, 1, 1, 0, 0, 0}, 1);
        expected.add_term({2, 0, 2, 0, 0, 0}, 1);
        expected.add_term({3, 0, 1, 0, 0, 0}, 1);
        require(spanning_tree_polynomial(g) == expected, "worked example mismatch");

        for (int p = 2; p <= 6; ++p) {
            MultiPolynomial sum(p);
            for (int v = 0; v < p; ++v) {
                std::vector<int> exps(p, 0);
                exps[v] = 1;
                sum.add_term(exps, 1);
            }
            MultiPolynomial power(p);
            power.add_term(std::vector<int>(p, 0), 1);
            for (int e = 0; e < p - 2; ++e) power = power * sum;
            require(spanning_tree_polynomial(complete_graph(p)) == power,
                    "S_{K_p} mismatch at p=" + std::to_string(p));
            for (int k = 1; k <= p - 1; ++k)
                require(degree_k_trees_at_v1(complete_graph(p), k) ==
                            binomial(p - 2, k - 1) * pow_int(Int(p - 1), p - k - 1),
                        "degree-k count mismatch");
        }
    });

    criterion(7, "EGF pipelines and the horizon-30 round trip", [] {
        const BigSeq pm = exp_formula_forward(connected_class("perfect_matchings", 30));
        for (int n = 2; n <= 30; n += 2)
            require(pm.at(n) == double_factorial(n - 1), "perfect matchings != (2n-1)!!");
        require(pm.at(10) == 945, "9!! != 945");
        for (int n = 1; n <= 30; n += 2) require(pm.at(n) == 0, "odd perfect matchings");

        const std::vector<Int> am = named_count_sequence("all_matchings", 5);
        require(am == std::vector<Int>{Int(1), Int(2), Int(4), Int(10), Int(26)},
                "all matchings sequence");

        const BigSeq tf = connected_class("two_factors", 6);
        const long tf_expected[] = {0, 0, 1, 3, 12, 60};
        for (int n = 1; n <= 6; ++n)
            require(tf.at(n) == tf_expected[n - 1], "2-factor class");
        require(named_count("two_factors", 6) == 70, "K_6 two-factors != 70");
        require(named_count("two_factors", 6) == oracle::spanning_two_factors(6),
                "K_6 brute force");

        const std::vector<Int> forests = named_count_sequence("spanning_forests", 4);
        require(forests == std::vector<Int>{Int(1), Int(2), Int(7), Int(38)}, "forests");
        const std::vector<Int> conn = named_count_sequence("connected_subgraphs", 4);
        require(conn == std::vector<Int>{Int(1), Int(1), Int(4), Int(38)}, "connected");

        std::mt19937_64 rng(99);
        for (int trial = 0; trial < 5; ++trial) {
            BigSeq c(30);
            for (int n = 1; n <= 30; ++n) c.at(n) = Int(static_cast<long>(rng() % 23)) - 11;
            require(exp_formula_inverse(exp_formula_forward(c)) == c, "round trip");
        }
    });

    criterion(8, "Ramsey: r(3,3), K_17 chords, s-table, W < 1 iff condition, P_n bound", [] {
        require(verify_ramsey_value(3, 3), "r(3,3) verification failed");
        const EdgeColoring2 k17 = circulant_coloring(17, {1, 2, 4, 8});
        require(!has_mono_clique(k17, 4, EdgeColor::red).found, "red K_4 in K_17");
        require(!has_mono_clique(k17, 4, EdgeColor::blue).found, "blue K_4 in K_17");
        for (int m = 1; m <= 4; ++m)
            for (int n = 1; n <= 9; ++n)
                require(ramsey_s(m, n) == binomial(m + n - 2, m - 1), "s-table");
        for (int r = 1; r <= 30; ++r)
            for (int n = 2; n <= 6; ++n) {
                const RamseyBoundValues b = bound_values(r, n);
                require(b.lower_condition == (b.expected_mono < 1), "W < 1 mismatch");
            }
        for (int n = 1; n <= 60; ++n)
            require(coin_tail(n) < pow_rat(Rat(19, 20), n), "P_n bound fails");
    });

    criterion(9, "MST: four algorithms vs brute force, local optimality, NN example", [] {
        for (uint64_t seed = 0; seed < 200; ++seed) {
            oracle::RandomGraphSpec spec;
            spec.max_vertices = 8;
            spec.max_edges = 12;
            spec.require_connected = true;
            const Pseudograph g = oracle::random_pseudograph(seed, spec);
            const WeightedGraph wg(g, oracle::small_integer_weights(g.edge_count(), seed));
            Rat best;
            bool first = true;
            for_each_spanning_tree(g, [&](const std::vector<int>& tree) {
                const Rat w = wg.weight_of(tree);
                if (first || w < best) {
                    best = w;
                    first = false;
                }
            });
            require(!first, "no spanning tree in connected graph");
            require(kruskal(wg).weight == best, "kruskal");
            require(prim(wg, 0).weight == best, "prim");
            require(boruvka(wg).weight == best, "boruvka");
            require(reverse_delete(wg).weight == best, "reverse delete");
        }

        for (uint64_t seed = 0; seed < 25; ++seed) {
            oracle::RandomGraphSpec spec;
            spec.max_vertices = 7;
            spec.max_edges = 10;
            spec.require_connected = true;
            const Pseudograph g = oracle::random_pseudograph(seed, spec);
            const WeightedGraph wg(g, oracle::small_integer_weights(g.edge_count(), seed + 1));
            Rat best;
            bool first = true;
            std::vector<std::vector<int>> trees;
            for_each_spanning_tree(g, [&](const std::vector<int>& tree) {
                trees.push_back(tree);
                const Rat w = wg.weight_of(tree);
                if (first || w < best) {
                    best = w;
                    first = false;
                }
            });
            for (const auto& tree : trees)
                require(is_locally_minimal(wg, tree).locally_minimal ==
                            (wg.weight_of(tree) == best),
                        "local != global");
        }

        const Pseudograph k4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}});
        const WeightedGraph nn(k4, {Rat(1), Rat(1), Rat(5), Rat(4), Rat(2), Rat(2)});
        const TourResult tour = nearest_neighbor_cycle(nn, 0);
        require(tour.weight == 11, "NN tour weight != 11");
        require(nn.weights[4] + nn.weights[1] + nn.weights[5] + nn.weights[3] == 9,
                "optimal cycle != 9");
    });

    criterion(10, "Koenig, m+n=p, min-cut duality, marriage via min-cut", [] {
        std::mt19937_64 rng(2024);
        for (int trial = 0; trial < 80; ++trial) {
            const int l = 1 + static_cast<int>(rng() % 6);
            const int r = 1 + static_cast<int>(rng() % 6);
            Pseudograph g(l + r);
            const int q = static_cast<int>(rng() % 15);
            for (int e = 0; e < q; ++e) {
                const int a = static_cast<int>(rng() % l);
                const int b = l + static_cast<int>(rng() % r);
                if (g.multiplicity(a, b) == 0) g.add_edge(a, b);
            }
            const Bigraph bg(g, l);
            const Matching m = max_matching(bg);
            const std::vector<int> cover = min_vertex_cover(bg);
            require(static_cast<int>(cover.size()) == m.size(), "Koenig equality");
            require(static_cast<int>(cover.size()) == oracle::min_vertex_cover_size(g),
                    "cover vs oracle");
        }

        for (uint64_t seed = 0; seed < 60; ++seed) {
            oracle::RandomGraphSpec spec;
            spec.max_vertices = 8;
            spec.max_edges = 12;
            spec.allow_loops = false;
            spec.require_connected = true;
            const Pseudograph g = oracle::random_pseudograph(seed, spec);
            if (g.vertex_count() < 2) continue;
            const std::vector<int> deg = g.degrees();
            bool bare = false;
            for (int d : deg) bare = bare || d == 0;
            if (bare) continue;
            const int m = max_matching_size_general(g);
            const std::vector<int> cover = min_edge_cover(g);
            require(static_cast<int>(cover.size()) + m == g.vertex_count(), "m + n != p");
            if (g.edge_count() <= 20)
                require(static_cast<int>(cover.size()) == oracle::min_edge_cover_size(g),
                        "edge cover vs oracle");
        }

        std::mt19937_64 drng(7);
        for (int trial = 0; trial < 50; ++trial) {
            const int n = 3 + static_cast<int>(drng() % 6);
            std::vector<Edge> arcs;
            const int m = static_cast<int>(drng() % 14);
            for (int i = 0; i < m; ++i) {
                const int a = static_cast<int>(drng() % n);
                const int b = static_cast<int>(drng() % n);
                if (a != b) arcs.push_back({a, b});
            }
            const Digraph d(n, arcs);
            const PathsAndCut pc = edge_disjoint_paths(d, 0, n - 1);
            require(pc.paths.size() == pc.cut.size(), "duality |paths| != |cut|");
            require(static_cast<int>(pc.paths.size()) ==
                        oracle::max_arc_disjoint_paths(d, 0, n - 1),
                    "paths vs oracle");
            require(static_cast<int>(pc.cut.size()) == oracle::min_cut_size(d, 0, n - 1),
                    "cut vs oracle");
        }

        std::mt19937_64 mrng(11);
        for (int trial = 0; trial < 500; ++trial) {
            const int l = 1 + static_cast<int>(mrng() % 6);
            const int r = 1 + static_cast<int>(mrng() % 6);
            Pseudograph g(l + r);
            const int q = static_cast<int>(mrng() % 14);
            for (int e = 0; e < q; ++e) {
                const int a = static_cast<int>(mrng() % l);
                const int b = l + static_cast<int>(mrng() % r);
                if (g.multiplicity(a, b) == 0) g.add_edge(a, b);
            }
            const Bigraph bg(g, l);
            require(marriage_via_mincut(bg) == hall_check(bg).holds,
                    "marriage methods disagree");
        }
    });

    criterion(11, "surfaces: K_7 faces, torus model, face coverage, Heawood, K_8 rejection", [] {
        const RotationSystem k7 = k7_torus_rotation();
        const FaceTrace faces = trace_faces(k7);
        require(faces.count() == 14, "K_7 face count");
        require(euler_genus(k7).genus == 1, "K_7 genus");

        const EulerResult torus = euler_genus(torus_model_rotation());
        require(torus.chi == 0, "torus model chi");

        std::mt19937_64 rng(31);
        for (int trial = 0; trial < 200; ++trial) {
            oracle::RandomGraphSpec spec;
            spec.max_vertices = 8;
            spec.max_edges = 12;
            spec.require_connected = true;
            const Pseudograph g = oracle::random_pseudograph(rng(), spec);
            std::vector<std::vector<int>> lists(g.vertex_count());
            for (int v = 0; v < g.vertex_count(); ++v) {
                for (int e : g.incident_edges(v)) {
                    lists[v].push_back(e);
                    if (g.is_loop(e)) lists[v].push_back(e);
                }
                std::shuffle(lists[v].begin(), lists[v].end(), rng);
            }
            const RotationSystem rs = rotation_from_edge_lists(g, lists);
            const FaceTrace t = trace_faces(rs);
            size_t total = 0;
            std::vector<int> seen(2 * g.edge_count(), 0);
            for (const auto& face : t.faces) {
                total += face.size();
                for (int dart : face) ++seen[dart];
            }
            require(total == 2 * static_cast<size_t>(g.edge_count()), "face length sum != 2q");
            for (int count : seen) require(count == 1, "edge side missed or repeated");
            require(euler_genus(rs).genus >= 0, "negative genus");
        }

        require(heawood_bound(0) == 4, "Heawood(0)");
        require(heawood_bound(1) == 7, "Heawood(1)");
        require(heawood_bound(2) == 8, "Heawood(2)");
        require(toroidal_necessary(complete_graph(8)).verdict == "not toroidal",
                "K_8 not rejected");
    });

    criterion(12, "Rado: witnesses, diameter 2, embeddings, G(200,1/2) diameter", [] {
        std::mt19937_64 rng(17);
        for (int trial = 0; trial < 1000; ++trial) {
            std::vector<Int> v, w;
            for (int label = 0; label < 64; ++label) {
                const uint64_t roll = rng() % 8;
                if (roll == 0) v.emplace_back(label);
                else if (roll == 1) w.emplace_back(label);
            }
            const Int x = rado_witness(v, w);
            for (const Int& a : v) require(bit_adjacent(x, a), "witness misses V");
            for (const Int& b : w) require(!bit_adjacent(x, b), "witness touches W");
        }

        for (long i = 0; i < 64; ++i)
            for (long j = i + 1; j < 64; ++j) {
                const Int x = rado_witness({Int(i), Int(j)}, {});
                require(bit_adjacent(x, i) && bit_adjacent(x, j), "no common neighbor");
            }

        for (int p = 1; p <= 5; ++p) {
            const int pairs = p * (p - 1) / 2;
            for (uint32_t mask = 0; mask < (uint32_t(1) << pairs); ++mask) {
                Pseudograph g(p);
                int bit = 0;
                for (int i = 0; i < p; ++i)
                    for (int j = i + 1; j < p; ++j, ++bit)
                        if (mask & (uint32_t(1) << bit)) g.add_edge(i, j);
                const std::vector<Int> labels = embed_induced(g);
                for (int u = 0; u < p; ++u)
                    for (int v2 = u + 1; v2 < p; ++v2)
                        require(bit_adjacent(labels[u], labels[v2]) ==
                                    (g.multiplicity(u, v2) > 0),
                                "embedding not induced");
            }
        }

        int diameter2 = 0;
        for (uint64_t seed = 0; seed < 100; ++seed) {
            const GnpSample s = gnp_sample(200, Rat(1, 2), seed);
            if (is_connected(s.graph) && diameter(s.graph) == 2) ++diameter2;
        }
        require(diameter2 >= 99, "diameter-2 fraction " + std::to_string(diameter2) + "/100");
    });

    criterion(13, "puzzles: wolf-goat-cabbage and missionaries 4+4", [] {
        const PuzzleGraph wgc = wolf_goat_cabbage();
        require(wgc.graph.vertex_count() == 10, "wgc state count");
        const PuzzleSolutions sol = puzzle_solutions(wgc);
        require(sol.reachable && sol.shortest == 7, "wgc shortest");
        require(sol.simple_path_count == 2, "wgc solutions");
        require(!puzzle_solutions(missionaries(4, 4, 2)).reachable, "4+4 should be stuck");
    });

    criterion(14, "CLI golden outputs", [] {
        const std::string data = EXGRAPH_DATA_DIR;
        require(run_cli("trees " + data + "/k4.txt --method matrix") == "16\n", "trees golden");
        require(run_cli("egf all_matchings 5") == "1 2 4 10 26\n", "egf golden");
        require(run_cli("heawood 1") == "7\n", "heawood golden");
    });

    if (failures == 0) {
        std::cout << "all 14 criteria passed\n";
        return 0;
    }
    std::cout << failures << " criteria failed\n";
    return 1;
}
