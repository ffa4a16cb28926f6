#include <benchmark/benchmark.h>

#include "symcol/distinguishing.hpp"
#include "symcol/layered.hpp"

using namespace symcol;

namespace {

Graph seeded_regular(int n, int d) {
    for (std::uint64_t seed = 1;; ++seed) {
        try {
            auto g = random_regular(n, d, {.seed = seed});
            if (is_connected(g)) return g;
        } catch (const std::exception&) {
        }
    }
}

} // namespace

static void BM_ColourRandomRegular(benchmark::State& state) {
    const auto g = seeded_regular(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    ColourOptions options;
    options.verify = false;
    for (auto _ : state) benchmark::DoNotOptimize(colour_regular(g, options));
}
BENCHMARK(BM_ColourRandomRegular)
    ->Args({20, 3})
    ->Args({40, 3})
    ->Args({20, 4})
    ->Args({20, 5})
    ->Args({24, 6})
    ->Unit(benchmark::kMillisecond);

static void BM_ColourCirculantVerified(benchmark::State& state) {
    const auto g = circulant(static_cast<int>(state.range(0)), {1, 2, 3});
    for (auto _ : state) benchmark::DoNotOptimize(colour_regular(g));
}
BENCHMARK(BM_ColourCirculantVerified)->Arg(14)->Arg(28)->Unit(benchmark::kMillisecond);

static void BM_DPrimeComplete(benchmark::State& state) {
    const auto g = complete(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(distinguishing_index(g, 4));
}
BENCHMARK(BM_DPrimeComplete)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_IsDistinguishingCycle(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto g = cycle(n);
    const auto c = cycle_colouring(n);
    for (auto _ : state) benchmark::DoNotOptimize(is_distinguishing(g, c));
}
BENCHMARK(BM_IsDistinguishingCycle)->RangeMultiplier(4)->Range(16, 1024);
