// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "connlap/bounds.hpp"
#include "connlap/complex.hpp"
#include "connlap/eigen_sym.hpp"
#include "connlap/exact_linalg.hpp"
#include "connlap/generators.hpp"
#include "connlap/operators.hpp"

namespace {

using namespace connlap;

IntMatrix cycle_connection(int n) { return connection_laplacian(build_complex(gen::cycle(n))); }

void BM_Charpoly(benchmark::State& state) {
  const IntMatrix l = cycle_connection(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(charpoly(l));
  state.SetComplexityN(l.rows());
}
BENCHMARK(BM_Charpoly)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void BM_InverseIntegral(benchmark::State& state) {
  const IntMatrix l = cycle_connection(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(inverse_integral(l));
  state.SetComplexityN(l.rows());
}
BENCHMARK(BM_InverseIntegral)->RangeMultiplier(2)->Range(8, 128)->Complexity();

void BM_GreenStar(benchmark::State& state) {
  const Complex c = build_complex(gen::cycle(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(green_star(c));
}
BENCHMARK(BM_GreenStar)->RangeMultiplier(2)->Range(8, 128);

void BM_EigSym(benchmark::State& state) {
  const Eigen::MatrixXd l = cycle_connection(static_cast<int>(state.range(0))).to_double();
  for (auto _ : state) benchmark::DoNotOptimize(eig_sym(l));
  state.SetComplexityN(l.rows());
}
BENCHMARK(BM_EigSym)->RangeMultiplier(2)->Range(16, 128)->Complexity();

void BM_KWalk(benchmark::State& state) {
  const Graph g = gen::petersen(6, 2);
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bound_kwalk(g, k));
}
BENCHMARK(BM_KWalk)->Arg(3)->Arg(8)->Arg(24);

void BM_HydrogenResidual(benchmark::State& state) {
  const Complex c = build_complex(gen::grid(4, static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(hydrogen_residual(c));
}
BENCHMARK(BM_HydrogenResidual)->Arg(2)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
