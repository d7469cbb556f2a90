#include <benchmark/benchmark.h>

#include "exgraph/egf.hpp"
#include "exgraph/graph.hpp"
#include "exgraph/matchflow.hpp"
#include "exgraph/mst.hpp"
#include "exgraph/polynomials.hpp"
#include "exgraph/spancount.hpp"

using namespace exgraph;

static void BM_TreesMatrix_Complete(benchmark::State& state) {
    const Pseudograph g = complete_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(count_trees_matrix(g));
}
BENCHMARK(BM_TreesMatrix_Complete)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

static void BM_TreesDpc_Wheel(benchmark::State& state) {
    const Pseudograph g = wheel_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(count_trees_dpc(g));
}
BENCHMARK(BM_TreesDpc_Wheel)->Arg(4)->Arg(6)->Arg(8);

static void BM_TreesBrute_Fan(benchmark::State& state) {
    const Pseudograph g = fan_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(count_trees_bruteforce(g));
}
BENCHMARK(BM_TreesBrute_Fan)->Arg(6)->Arg(9)->Arg(12);

static void BM_Chromatic_Ladder(benchmark::State& state) {
    const Pseudograph g = ladder_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(chromatic_polynomial(g));
}
BENCHMARK(BM_Chromatic_Ladder)->Arg(3)->Arg(5)->Arg(7);

static void BM_MatchingPoly_Complete(benchmark::State& state) {
    const Pseudograph g = complete_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(matching_polynomial(g));
}
BENCHMARK(BM_MatchingPoly_Complete)->Arg(6)->Arg(8)->Arg(10);

static void BM_EgfForward(benchmark::State& state) {
    const BigSeq c = connected_class("spanning_forests", static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(exp_formula_forward(c));
}
BENCHMARK(BM_EgfForward)->Arg(30)->Arg(100)->Arg(300);

static void BM_MaxMatching_Bipartite(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Bigraph g(complete_bipartite(n, n), n);
    for (auto _ : state) benchmark::DoNotOptimize(max_matching(g));
}
BENCHMARK(BM_MaxMatching_Bipartite)->Arg(8)->Arg(16)->Arg(32);

static void BM_Kruskal_Complete(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Pseudograph g = complete_graph(n);
    std::vector<Rat> weights;
    for (int e = 0; e < g.edge_count(); ++e) weights.emplace_back((e * 7919) % 1009);
    const WeightedGraph wg(g, weights);
    for (auto _ : state) benchmark::DoNotOptimize(kruskal(wg));
}
BENCHMARK(BM_Kruskal_Complete)->Arg(16)->Arg(32)->Arg(64);

BENCHMARK_MAIN();
