// Parallel kernels against their single-threaded reference versions.

#include "cyclemax/cycle_count.hpp"
#include "cyclemax/graph.hpp"
#include "cyclemax/permanent.hpp"

#include <benchmark/benchmark.h>

using namespace cyclemax;

namespace {

BlockMatrixSpec gamma_spec(int i, int t)
{
    return block_spec_from(gamma_blowup_uniform(i, t));
}

void BM_block_permanent(benchmark::State& state)
{
    const auto spec = gamma_spec(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    for (auto _ : state)
        benchmark::DoNotOptimize(block_permanent(spec));
}

void BM_block_permanent_reference(benchmark::State& state)
{
    const auto spec = gamma_spec(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    for (auto _ : state)
        benchmark::DoNotOptimize(block_permanent_reference(spec));
}

void BM_ryser(benchmark::State& state)
{
    const auto a = adjacency_plus_identity(make_gamma(static_cast<int>(state.range(0))).graph);
    for (auto _ : state)
        benchmark::DoNotOptimize(ryser_permanent(a));
}

void BM_ryser_reference(benchmark::State& state)
{
    const auto a = adjacency_plus_identity(make_gamma(static_cast<int>(state.range(0))).graph);
    for (auto _ : state)
        benchmark::DoNotOptimize(ryser_permanent_reference(a));
}

void BM_count_cycles(benchmark::State& state)
{
    const Graph g = make_turan(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(count_cycles(g));
}

void BM_count_cycles_serial(benchmark::State& state)
{
    const Graph g = make_turan(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(count_cycles_serial(g));
}

}

BENCHMARK(BM_block_permanent)->Args({2, 6})->Args({3, 4})->Args({2, 10})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_block_permanent_reference)->Args({2, 6})->Args({3, 4})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ryser)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ryser_reference)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_count_cycles)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_count_cycles_serial)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
