#include <benchmark/benchmark.h>

#include "symcol/aut_search.hpp"
#include "symcol/corpus.hpp"

using namespace symcol;

static void BM_GroupOrderComplete(benchmark::State& state) {
    const auto g = complete(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(group_order(g));
}
BENCHMARK(BM_GroupOrderComplete)->DenseRange(6, 14, 4);

static void BM_StabiliserPetersen(benchmark::State& state) {
    const auto g = petersen();
    for (auto _ : state) benchmark::DoNotOptimize(stabiliser_generators(g, 0));
}
BENCHMARK(BM_StabiliserPetersen);

static void BM_AsymmetryRandomCubic(benchmark::State& state) {
    const auto g = random_regular(static_cast<int>(state.range(0)), 3, {.seed = 3});
    AutConstraint c;
    c.nontrivial_on = VertexSet{};
    for (Vertex v = 0; v < g.order(); ++v) c.nontrivial_on->push_back(v);
    for (auto _ : state) benchmark::DoNotOptimize(find_automorphism(g, c));
}
BENCHMARK(BM_AsymmetryRandomCubic)->RangeMultiplier(2)->Range(16, 128);

static void BM_IsomorphismCirculant(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto a = circulant(n, {1, 3});
    std::vector<Edge> shuffled;
    for (const auto& e : a.edges()) shuffled.emplace_back((e.u * 5 + 1) % n, (e.v * 5 + 1) % n);
    const Graph b(n, shuffled);
    for (auto _ : state) benchmark::DoNotOptimize(are_isomorphic(a, b));
}
BENCHMARK(BM_IsomorphismCirculant)->Arg(16)->Arg(32)->Arg(64);

static void BM_EnumerateQuartic(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(connected_regular_graphs(static_cast<int>(state.range(0)), 4));
}
BENCHMARK(BM_EnumerateQuartic)->DenseRange(8, 10)->Unit(benchmark::kMillisecond);
