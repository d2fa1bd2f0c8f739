#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "nfold/axioms.hpp"

namespace {

std::mt19937_64 rng(7);
double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

nfold::AxiomInstance beloch_instance() {
  nfold::AxiomInstance inst;
  inst.op_id = 7;
  inst.points = {{uniform(-2, 2), uniform(-2, 2)}, {uniform(-2, 2), uniform(-2, 2)}};
  const double p1 = uniform(-M_PI / 2, M_PI / 2), p2 = uniform(-M_PI / 2, M_PI / 2);
  inst.lines = {nfold::make_line(std::cos(p1), std::sin(p1), uniform(-2, 2)),
                nfold::make_line(std::cos(p2), std::sin(p2), uniform(-2, 2))};
  return inst;
}

void BM_SolveBelochFold(benchmark::State& state) {
  const auto inst = beloch_instance();
  for (auto _ : state) {
    auto sol = nfold::solve_axiom(inst);
    benchmark::DoNotOptimize(sol);
  }
}
BENCHMARK(BM_SolveBelochFold);

void BM_SolveTangentFold(benchmark::State& state) {
  nfold::AxiomInstance inst;
  inst.op_id = 6;
  inst.points = {{0.0, 2.0}, {0.3, 0.7}};
  inst.lines = {nfold::make_line(0.0, 1.0, 0.0)};
  for (auto _ : state) {
    auto sol = nfold::solve_axiom(inst);
    benchmark::DoNotOptimize(sol);
  }
}
BENCHMARK(BM_SolveTangentFold);

}  // namespace
