#include <benchmark/benchmark.h>

#include "ballvol/comb.hpp"
#include "ballvol/exact.hpp"
#include "ballvol/intersect.hpp"
#include "ballvol/space.hpp"

namespace {

using namespace ballvol;

void BM_BallVolume(benchmark::State& state) {
    SpaceSpec s = SpaceSpec::hamming(2, static_cast<int>(state.range(0)));
    int r = s.n / 3;
    for (auto _ : state) {
        VolumeProfile p = ball_volume(s, r);
        benchmark::DoNotOptimize(p.volume.get_mpz_t());
    }
}
BENCHMARK(BM_BallVolume)->Arg(100)->Arg(300)->Arg(1000);

void BM_PermutationVolume(benchmark::State& state) {
    SpaceSpec s = SpaceSpec::permutation(static_cast<int>(state.range(0)));
    int r = s.n / 2;
    for (auto _ : state) {
        VolumeProfile p = ball_volume(s, r);
        benchmark::DoNotOptimize(p.volume.get_mpz_t());
    }
}
BENCHMARK(BM_PermutationVolume)->Arg(50)->Arg(200);

// closed form at the scale the decay scans use
void BM_IntersectionClosedForm(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        BigCount v = hamming_intersection_volume(2, n, n / 4, n / 8);
        benchmark::DoNotOptimize(v.get_mpz_t());
    }
}
BENCHMARK(BM_IntersectionClosedForm)->Arg(100)->Arg(300);

void BM_IntersectionBruteForce(benchmark::State& state) {
    SpaceSpec s = SpaceSpec::hamming(2, 14);
    Point a = origin_point(s);
    Point b = canonical_partner(s, 6);
    for (auto _ : state) {
        BigCount v = intersection_volume_bruteforce(s, a, b, 4);
        benchmark::DoNotOptimize(v.get_mpz_t());
    }
}
BENCHMARK(BM_IntersectionBruteForce);

// interval comparison of a ~90-digit rational against coeff * e^x
void BM_ExpBoundCompare(benchmark::State& state) {
    ExactRatio ratio = make_ratio(binomial(300, 140), binomial(300, 150));
    for (auto _ : state) {
        BoundCheck c = compare_to_exp_bound(ratio, 2.0, -0.4);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_ExpBoundCompare);

}  // namespace

BENCHMARK_MAIN();
