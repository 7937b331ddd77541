// Serial reference vs OpenMP kernel for the three hot loops. Run with
// OMP_NUM_THREADS set to compare thread counts.

#include <benchmark/benchmark.h>

#include "colsum/group_oracle.hpp"
#include "colsum/sequences.hpp"
#include "colsum/series.hpp"

using namespace colsum;

namespace {

void BM_CensusSerial(benchmark::State& state) {
    auto spec = GroupSpec::hyperoctahedral(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(census_serial(spec, RootKind::square));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(spec.order().get_si()));
}

void BM_CensusParallel(benchmark::State& state) {
    auto spec = GroupSpec::hyperoctahedral(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(census_parallel(spec, RootKind::square));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(spec.order().get_si()));
}

void BM_TableSumSerial(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(table_sum_direct(Family::G, 3, n, true));
}

void BM_TableSumParallel(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(table_sum_direct(Family::G, 3, n, false));
}

Series bench_operand(int order) { return total_sum_gf(Family::B, 2, order); }

void BM_MultiplySerial(benchmark::State& state) {
    auto a = bench_operand(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(Series::multiply_serial(a, a));
}

void BM_MultiplyParallel(benchmark::State& state) {
    auto a = bench_operand(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(Series::multiply(a, a));
}

}  // namespace

BENCHMARK(BM_CensusSerial)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusParallel)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_TableSumSerial)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TableSumParallel)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_MultiplySerial)->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MultiplyParallel)->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
