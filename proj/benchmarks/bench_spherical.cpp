#include <benchmark/benchmark.h>

#include <cmath>

#include "ballvol/spherical.hpp"

namespace {

using namespace ballvol;

const double kTheta = std::acos(-1.0) / 3.0;

// adaptive quadrature cost as the integrand sharpens with n
void BM_CapArea(benchmark::State& state) {
    CapParams p{static_cast<int>(state.range(0)), kTheta};
    for (auto _ : state) {
        double s = cap_area(p);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_CapArea)->Arg(3)->Arg(50)->Arg(400);

void BM_BoundTable(benchmark::State& state) {
    for (auto _ : state) {
        SphericalBounds b = bound_table(200, kTheta);
        benchmark::DoNotOptimize(b.jjp_bound);
    }
}
BENCHMARK(BM_BoundTable);

void BM_CapOverlapMC(benchmark::State& state) {
    std::uint64_t seed = 1;
    for (auto _ : state) {
        double v = cap_overlap_mc(10, 0.8, 0.5, 2000, seed++);
        benchmark::DoNotOptimize(v);
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * 2000);
}
BENCHMARK(BM_CapOverlapMC);

void BM_CapIntersectionCheck(benchmark::State& state) {
    std::uint64_t seed = 1;
    for (auto _ : state) {
        CapIntersectionReport r = verify_cap_intersection(20, kTheta, 5000, seed++);
        benchmark::DoNotOptimize(r.mean_overlap);
    }
}
BENCHMARK(BM_CapIntersectionCheck);

}  // namespace
