#include <benchmark/benchmark.h>

#include "ballvol/codes.hpp"
#include "ballvol/graph.hpp"
#include "ballvol/hardcore.hpp"

namespace {

using namespace ballvol;

void BM_BuildGraphMaterialized(benchmark::State& state) {
    SpaceSpec s = SpaceSpec::hamming(2, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        BallGraph g = build_ball_graph(s, 2);
        benchmark::DoNotOptimize(g.max_degree);
    }
}
BENCHMARK(BM_BuildGraphMaterialized)->Arg(10)->Arg(12);

void BM_GreedyCode(benchmark::State& state) {
    SpaceSpec s = SpaceSpec::hamming(2, static_cast<int>(state.range(0)));
    BallGraph g = build_ball_graph(s, s.n / 4);
    for (auto _ : state) {
        CodeResult c = construct_code(g, CodeMethod::greedy_maximal);
        benchmark::DoNotOptimize(c.size);
    }
}
BENCHMARK(BM_GreedyCode)->Arg(10)->Arg(12)->Arg(14);

void BM_ExactIndependentSets(benchmark::State& state) {
    BallGraph g = build_ball_graph(SpaceSpec::hamming(2, 4), 1);
    for (auto _ : state) {
        PartitionResult p = count_independent_sets_exact(g, 1.0);
        benchmark::DoNotOptimize(p.partition_function);
    }
}
BENCHMARK(BM_ExactIndependentSets);

void BM_GlauberSteps(benchmark::State& state) {
    BallGraph g = build_ball_graph(SpaceSpec::hamming(2, 4), 1);
    std::uint64_t steps = static_cast<std::uint64_t>(state.range(0));
    std::uint64_t seed = 1;
    for (auto _ : state) {
        HardcoreEstimate e = hardcore_estimate(g, 1.0, steps, seed++);
        benchmark::DoNotOptimize(e.mean_occupancy);
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(steps));
}
BENCHMARK(BM_GlauberSteps)->Arg(100'000);

}  // namespace
