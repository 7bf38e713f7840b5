// Serial reference loop vs the OpenMP kernel on the same sweep.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "genus/sweep.hpp"

namespace {

const std::vector<genus::SweepCase>& cases() {
  static const auto e = [] {
    genus::SweepConfig c;
    c.q_list = {7};
    c.l_list = {3};
    c.max_deg = 4;
    c.max_m = 1;
    return genus::enumerate_sweep(c);
  }();
  return e.cases;
}

void BM_SweepSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(genus::run_serial(cases()));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cases().size()));
}

void BM_SweepParallel(benchmark::State& state) {
  omp_set_num_threads(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(genus::run_parallel(cases()));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cases().size()));
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
