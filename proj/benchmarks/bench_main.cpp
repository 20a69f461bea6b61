#include <benchmark/benchmark.h>

#include <numeric>
#include <vector>

#include "chebext/chebext.hpp"

namespace {

using namespace chebext;

std::vector<int> full_set(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return v;
}

void BM_SolveFirstKind(benchmark::State& state) {
  const ProblemSpec spec(ProblemKind::first, full_set(static_cast<int>(state.range(0))), 1.8);
  for (auto _ : state) benchmark::DoNotOptimize(solve_first_kind(spec));
}
BENCHMARK(BM_SolveFirstKind)->DenseRange(2, 30, 4);

void BM_ClosedFormFirstFull(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(closed_form_first_full(n, 1.8));
}
BENCHMARK(BM_ClosedFormFirstFull)->DenseRange(2, 30, 4);

void BM_SupSumSquares(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ExtremalSolution sol = solve_first_kind(ProblemSpec(ProblemKind::first, full_set(n), 1.8));
  std::vector<Polynomial> polys;
  for (const auto& [j, p] : sol.polys) polys.push_back(p);
  for (auto _ : state) benchmark::DoNotOptimize(sup_sum_squares(polys, 1.8));
}
BENCHMARK(BM_SupSumSquares)->RangeMultiplier(2)->Range(2, 16);

void BM_SupportMeasure(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CanonicalMomentSeq cm = dual_moments(ProblemSpec(ProblemKind::first, full_set(n), 1.8));
  for (auto _ : state) benchmark::DoNotOptimize(support_measure(cm));
}
BENCHMARK(BM_SupportMeasure)->RangeMultiplier(2)->Range(2, 30);

void BM_DualityCertificate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ProblemSpec spec(ProblemKind::first, full_set(n), 1.8);
  const ExtremalSolution sol = solve_first_kind(spec);
  for (auto _ : state) benchmark::DoNotOptimize(duality_certificate(sol, spec));
}
BENCHMARK(BM_DualityCertificate)->DenseRange(2, 8, 2);

void BM_BruteForce(benchmark::State& state) {
  const ProblemSpec spec(ProblemKind::first, {1, 2, 3}, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_max(spec, 20000, 7));
}
BENCHMARK(BM_BruteForce)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
