#include <benchmark/benchmark.h>

#include "wres/dsz/pipelines.hpp"
#include "wres/dsz/structures.hpp"

namespace {

using namespace wres;

const CoefficientCatalog& catalog() {
  static const Goldens goldens = load_goldens(WRES_DEFAULT_GOLDENS);
  static const CoefficientCatalog cat(goldens);
  return cat;
}

Exec exec_of(const benchmark::State& state) { return state.range(0) == 0 ? Exec::serial : Exec::parallel; }

void label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "parallel"); }

void BM_CoefficientSweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_coefficients(catalog(), 1, 16, exec_of(state)));
  label(state);
}
BENCHMARK(BM_CoefficientSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CaseSweep(benchmark::State& state) {
  std::vector<CaseKey> keys;
  for (Theorem t : kTheorems)
    for (CaseId c : kCases)
      for (unsigned m = 1; m <= 3; ++m) keys.push_back({t, c, m});
  for (auto _ : state) benchmark::DoNotOptimize(run_cases(catalog(), keys, exec_of(state)));
  label(state);
}
BENCHMARK(BM_CaseSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_TheoremSweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_theorems(catalog(), 1, 3, exec_of(state)));
  label(state);
}
BENCHMARK(BM_TheoremSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_DisplaySweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_displays(catalog(), 1, 3, exec_of(state)));
  label(state);
}
BENCHMARK(BM_DisplaySweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
