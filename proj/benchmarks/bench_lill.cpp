#include <benchmark/benchmark.h>

#include <random>

#include "nfold/lill.hpp"
#include "nfold/section.hpp"

namespace {

void BM_LillSolveQuintic(benchmark::State& state) {
  const nfold::Polynomial p({1.0, 0.0, 0.0, 0.0, 0.0, -32.0});
  for (auto _ : state) {
    auto sols = nfold::solve_real_roots(p);
    benchmark::DoNotOptimize(sols);
  }
}
BENCHMARK(BM_LillSolveQuintic);

void BM_LillSolveDegree(benchmark::State& state) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> coeff(-5.0, 5.0);
  std::vector<double> coeffs(static_cast<std::size_t>(state.range(0)) + 1);
  for (double& c : coeffs) c = coeff(rng);
  if (std::abs(coeffs.front()) < 1.0) coeffs.front() = 2.0;
  const nfold::Polynomial p(coeffs);
  for (auto _ : state) {
    auto sols = nfold::solve_real_roots(p);
    benchmark::DoNotOptimize(sols);
  }
}
BENCHMARK(BM_LillSolveDegree)->Arg(3)->Arg(9)->Arg(19)->Arg(29);

void BM_Trisect(benchmark::State& state) {
  for (auto _ : state) {
    auto r = nfold::m_sect(1.0, 3);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_Trisect);

void BM_MissFunction(benchmark::State& state) {
  const nfold::LillPath path = nfold::build_lill_path(nfold::chebyshev(19));
  double theta = -0.7;
  for (auto _ : state) {
    theta = theta < 0.7 ? theta + 1e-5 : -0.7;
    benchmark::DoNotOptimize(nfold::miss_function(path, theta));
  }
}
BENCHMARK(BM_MissFunction);

}  // namespace
