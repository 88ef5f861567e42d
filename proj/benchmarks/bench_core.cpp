#include <benchmark/benchmark.h>

#include <cmath>

#include "fpme/kernel.hpp"
#include "fpme/solver.hpp"
#include "fpme/special.hpp"
#include "fpme/theory.hpp"

namespace {

using namespace fpme;

void BM_RegularizedBetaComplement(benchmark::State& state) {
  const special::AccuracyPolicy policy;
  const double p = 4.0 / 0.5 + 1.0;
  const double q = 0.5;
  const double log_beta = std::lgamma(p) + std::lgamma(q) - std::lgamma(p + q);
  double x = 0.01;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        special::regularized_incomplete_beta_complement(p, q, x, log_beta,
                                                        policy));
    x += 1e-4;
    if (x > 0.99) x = 0.01;
  }
}
BENCHMARK(BM_RegularizedBetaComplement);

void BM_KernelEval(benchmark::State& state) {
  const ProblemParams params{0.8, 10.0};
  const kernel::KernelEvaluator K(params);
  double u = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(K(0.9, u));
    u += 1e-4;
    if (u > 0.89) u = 0.0;
  }
}
BENCHMARK(BM_KernelEval);

void BM_SolveMidpoint(benchmark::State& state) {
  const ProblemParams params{0.8, 10.0};
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(solver::solve_midpoint(params, n));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_SolveMidpoint)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

void BM_AmplificationF(benchmark::State& state) {
  const theory::AmplificationParams p{0.3, 1.0, 1.1, 0.2};
  const long n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(theory::amplification_f(p, n));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_AmplificationF)->RangeMultiplier(4)->Range(256, 16384)->Complexity();

}  // namespace

BENCHMARK_MAIN();
