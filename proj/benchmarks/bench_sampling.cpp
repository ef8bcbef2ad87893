#include <benchmark/benchmark.h>

#include "ballvol/comb.hpp"
#include "ballvol/sample.hpp"

namespace {

using namespace ballvol;

void BM_ShellSampleHamming(benchmark::State& state) {
    SpaceSpec s = SpaceSpec::hamming(2, static_cast<int>(state.range(0)));
    Point c = origin_point(s);
    SplitMix64 g = SplitMix64::derive(1, 0);
    for (auto _ : state) {
        Point p = sample_shell_point(s, c, s.n / 4, g);
        benchmark::DoNotOptimize(p.data());
    }
}
BENCHMARK(BM_ShellSampleHamming)->Arg(60)->Arg(200);

void BM_ShellSampleJohnson(benchmark::State& state) {
    SpaceSpec s = SpaceSpec::johnson(200, 100);
    Point c = origin_point(s);
    SplitMix64 g = SplitMix64::derive(2, 0);
    for (auto _ : state) {
        Point p = sample_shell_point(s, c, 40, g);
        benchmark::DoNotOptimize(p.data());
    }
}
BENCHMARK(BM_ShellSampleJohnson);

// dominated by the fixed-point-free rejection step
void BM_ShellSamplePermutation(benchmark::State& state) {
    SpaceSpec s = SpaceSpec::permutation(200);
    Point c = origin_point(s);
    SplitMix64 g = SplitMix64::derive(3, 0);
    for (auto _ : state) {
        Point p = sample_shell_point(s, c, 150, g);
        benchmark::DoNotOptimize(p.data());
    }
}
BENCHMARK(BM_ShellSamplePermutation);

void BM_EllStatistics(benchmark::State& state) {
    ShellSampleSpec spec;
    spec.space = SpaceSpec::hamming(2, 60);
    spec.a = origin_point(spec.space);
    spec.b = canonical_partner(spec.space, 20);
    spec.r = 15;
    spec.sample_count = 1000;
    spec.seed = 11;
    for (auto _ : state) {
        EllStatistics st = ell_statistics(spec);
        benchmark::DoNotOptimize(st.mean);
    }
}
BENCHMARK(BM_EllStatistics);

void BM_UniformBigBelow(benchmark::State& state) {
    BigCount bound = binomial(300, 150);
    SplitMix64 g = SplitMix64::derive(4, 0);
    for (auto _ : state) {
        BigCount v = uniform_big_below(bound, g);
        benchmark::DoNotOptimize(v.get_mpz_t());
    }
}
BENCHMARK(BM_UniformBigBelow);

}  // namespace
