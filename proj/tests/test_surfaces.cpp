#include <algorithm>
#include <random>

#include "doctest.h"
#include "exgraph/polynomials.hpp"
#include "exgraph/surfaces.hpp"
#include "support/oracles.hpp"

using namespace exgraph;

namespace {

// A uniformly random rotation system over a connected pseudograph.
RotationSystem random_rotation(uint64_t seed) {
    oracle::RandomGraphSpec spec;
    spec.max_vertices = 8;
    spec.max_edges = 12;
    spec.require_connected = true;
    const Pseudograph g = oracle::random_pseudograph(seed, spec);
    std::mt19937_64 rng(seed * 97 + 3);
    std::vector<std::vector<int>> lists(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        for (int e : g.incident_edges(v)) {
            lists[v].push_back(e);
            if (g.is_loop(e)) lists[v].push_back(e);
        }
        std::shuffle(lists[v].begin(), lists[v].end(), rng);
    }
    return rotation_from_edge_lists(g, lists);
}

// Smallest number of colors that properly colors g, via the chromatic
// polynomial.
int chromatic_number(const Pseudograph& g) {
    const IntPolynomial p = chromatic_polynomial(g);
    for (int x = 1; x <= g.vertex_count(); ++x)
        if (p.evaluate(x) > 0) return x;
    return g.vertex_count();
}

}  // namespace

TEST_CASE("face tracing on the tiny models") {
    // One loop: both sides bound their own face.
    const RotationSystem loop(Pseudograph(1, {{0, 0}}), {{0, 1}});
    const FaceTrace lt = trace_faces(loop);
    CHECK(lt.count() == 2);

    // The torus model: one vertex, two interleaved loops, a single face.
    const RotationSystem torus = torus_model_rotation();
    const FaceTrace tt = trace_faces(torus);
    CHECK(tt.count() == 1);
    const EulerResult te = euler_genus(torus);
    CHECK(te.chi == 0);
    CHECK(te.genus == 1);
}

TEST_CASE("K_4 admits a planar rotation (r = 4) among all rotation choices") {
    const Pseudograph k4 = complete_graph(4);
    // Each vertex has 3 neighbors: two cyclic orders each, 16 combinations.
    std::vector<std::vector<std::vector<int>>> choices(4);
    for (int v = 0; v < 4; ++v) {
        std::vector<int> n;
        for (int w = 0; w < 4; ++w)
            if (w != v) n.push_back(w);
        choices[v] = {{n[0], n[1], n[2]}, {n[0], n[2], n[1]}};
    }
    int best_r = 0;
    for (int mask = 0; mask < 16; ++mask) {
        std::vector<std::vector<int>> neighbor_lists;
        for (int v = 0; v < 4; ++v) neighbor_lists.push_back(choices[v][(mask >> v) & 1]);
        const RotationSystem rs = rotation_from_neighbor_lists(k4, neighbor_lists);
        best_r = std::max(best_r, trace_faces(rs).count());
    }
    CHECK(best_r == 4);  // p - q + r = 4 - 6 + 4 = 2: the planar drawing
}

TEST_CASE("the K_7 rotation closes 14 triangular faces on the torus") {
    const RotationSystem rs = k7_torus_rotation();
    const FaceTrace faces = trace_faces(rs);
    CHECK(faces.count() == 14);
    for (const auto& face : faces.faces) CHECK(face.size() == 3);
    const EulerResult e = euler_genus(rs);
    CHECK(e.chi == 0);   // 7 - 21 + 14
    CHECK(e.genus == 1);
}

TEST_CASE("face tracing covers each directed edge-side exactly once") {
    for (uint64_t seed = 0; seed < 200; ++seed) {
        const RotationSystem rs = random_rotation(seed);
        const FaceTrace faces = trace_faces(rs);
        size_t total = 0;
        std::vector<int> seen(2 * rs.graph.edge_count(), 0);
        for (const auto& face : faces.faces) {
            total += face.size();
            for (int dart : face) ++seen[dart];
        }
        CHECK(total == 2 * static_cast<size_t>(rs.graph.edge_count()));
        for (int count : seen) CHECK(count == 1);

        const EulerResult e = euler_genus(rs);
        CHECK(e.chi % 2 == 0);
        CHECK(e.chi <= 2);
        CHECK(e.genus >= 0);
    }
}

TEST_CASE("toroidal necessary conditions") {
    const ToroidalCheck k8 = toroidal_necessary(complete_graph(8));
    CHECK_FALSE(k8.q_le_3p);  // 28 > 24
    CHECK(k8.verdict == "not toroidal");

    const ToroidalCheck k7 = toroidal_necessary(complete_graph(7));
    CHECK(k7.q_le_3p);  // 21 <= 21
    CHECK(k7.verdict == "possibly toroidal");

    const ToroidalCheck k44 = toroidal_necessary(complete_bipartite(4, 4));
    CHECK(k44.q_le_3p);
    REQUIRE(k44.girth4_q_le_2p.has_value());
    CHECK(*k44.girth4_q_le_2p);  // 16 = 2*8, boundary pass
    CHECK(k44.verdict == "possibly toroidal");

    CHECK_THROWS_AS(toroidal_necessary(Pseudograph(1, {{0, 0}})), std::invalid_argument);
}

TEST_CASE("heawood bound values and the toroidal chromatic ceiling") {
    CHECK(heawood_bound(0) == 4);
    CHECK(heawood_bound(1) == 7);
    CHECK(heawood_bound(2) == 8);

    // Toroidal test graphs never need more than 7 colors.
    CHECK(chromatic_number(complete_graph(7)) == 7);
    CHECK(chromatic_number(complete_bipartite(4, 4)) == 2);
    CHECK(chromatic_number(cycle_graph(5)) == 3);
    CHECK(chromatic_number(wheel_graph(5)) == 4);
    for (const Pseudograph& g :
         {complete_graph(7), complete_bipartite(4, 4), cycle_graph(5), wheel_graph(5)})
        CHECK(chromatic_number(g) <= heawood_bound(1));
}

TEST_CASE("reduction to the single-loop minor") {
    CHECK_FALSE(loop_minor_chain(path_graph(5)).has_value());
    CHECK_FALSE(loop_minor_chain(star_graph(4)).has_value());

    for (const Pseudograph& g : {cycle_graph(3), complete_graph(4), wheel_graph(5),
                                 Pseudograph(2, {{0, 1}, {0, 1}}), cube_graph(3)}) {
        const auto chain = loop_minor_chain(g);
        REQUIRE(chain.has_value());
        Pseudograph work = g;
        for (const MinorStep& step : *chain) work = apply_minor_step(work, step);
        CHECK(work.vertex_count() == 1);
        CHECK(work.edge_count() == 1);
        CHECK(work.is_loop(0));
    }

    // C_3 contracts twice into the loop.
    const auto c3 = loop_minor_chain(cycle_graph(3));
    REQUIRE(c3.has_value());
    const int contractions = static_cast<int>(
        std::count_if(c3->begin(), c3->end(), [](const MinorStep& s) {
            return s.kind == MinorStep::Kind::contract_edge;
        }));
    CHECK(contractions == 2);
}

TEST_CASE("rotation systems validate their input") {
    CHECK_THROWS_AS(RotationSystem(Pseudograph(2, {{0, 1}}), {{0}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(RotationSystem(Pseudograph(2), {{}, {}}), std::domain_error);
    CHECK_THROWS_AS(rotation_from_edge_lists(path_graph(3), {{0}, {0, 1}, {}}),
                    std::invalid_argument);
    // A loop has exactly two ends; a third listing is malformed.
    CHECK_THROWS_AS(rotation_from_edge_lists(Pseudograph(1, {{0, 0}, {0, 0}}),
                                             {{0, 0, 0, 1}}),
                    std::invalid_argument);
    // A valid default rotation for a path.
    const RotationSystem rs = default_rotation(path_graph(3));
    CHECK(trace_faces(rs).count() == 1);
    CHECK(euler_genus(rs).genus == 0);
}
