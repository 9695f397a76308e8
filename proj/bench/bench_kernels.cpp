// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include "wordstat/montecarlo.hpp"
#include "wordstat/realfuncs.hpp"
#include "wordstat/verifier.hpp"

using namespace wordstat;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::parallel : Exec::serial; }

void BM_StirlingTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(StirlingTable(300, exec_of(state)));
}

void BM_BoundSoundness(benchmark::State& state) {
  const StirlingTable table(120, Exec::parallel);
  for (auto _ : state) benchmark::DoNotOptimize(verify_bound_soundness(table, 3, 120, exec_of(state)));
}

void BM_TailSweep(benchmark::State& state) {
  const StirlingTable table(150, Exec::parallel);
  const TheoremConfig cfg = TheoremConfig::make(0.1, 0.9);
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorem1_tails(cfg, table, 150, 1.0, 2, exec_of(state)));
}

void BM_MonteCarlo(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(empirical_distinct_law(100, 100000, 42, exec_of(state)));
}

void BM_PhiGrid(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sample_uniform(RealFunction::phi, 0.001, 0.999, 10000, exec_of(state)));
}

}  // namespace

BENCHMARK(BM_StirlingTable)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BoundSoundness)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TailSweep)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MonteCarlo)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PhiGrid)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
