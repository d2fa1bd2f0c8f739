#include <benchmark/benchmark.h>

#include "nfold/periods.hpp"
#include "nfold/polygon.hpp"
#include "nfold/verify.hpp"

namespace {

void BM_PeriodTower(benchmark::State& state) {
  const std::int64_t p = state.range(0);
  for (auto _ : state) {
    auto tower = nfold::build_period_tower(p);
    benchmark::DoNotOptimize(tower);
  }
}
BENCHMARK(BM_PeriodTower)->Arg(17)->Arg(59)->Arg(199);

void BM_BuildPolygon(benchmark::State& state) {
  const std::int64_t m = state.range(0);
  for (auto _ : state) {
    auto r = nfold::build_polygon(m);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_BuildPolygon)->Arg(5)->Arg(17)->Arg(60)->Arg(199);

void BM_VerifyPolygonTrace(benchmark::State& state) {
  const auto r = nfold::build_polygon(state.range(0));
  for (auto _ : state) {
    auto report = nfold::verify(r.trace);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_VerifyPolygonTrace)->Arg(17)->Arg(199);

}  // namespace

BENCHMARK_MAIN();
