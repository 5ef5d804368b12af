// Serial reference vs OpenMP kernels. Run with OMP_NUM_THREADS set to compare.

#include <benchmark/benchmark.h>

#include "gmext/certifier.hpp"
#include "gmext/explorer.hpp"
#include "gmext/oracle.hpp"
#include "gmext/stationarity.hpp"

using namespace gmext;

namespace {

Execution mode(const benchmark::State& s) { return s.range(0) ? Execution::parallel : Execution::serial; }

void label(benchmark::State& s) { s.SetLabel(s.range(0) ? "parallel" : "serial"); }

void BM_Estimate(benchmark::State& s) {
  const ExtremumProblem p(3.0, 3, 0.1);
  for (auto _ : s) benchmark::DoNotOptimize(estimate(p, Direction::inf, {}, mode(s)).value);
  label(s);
}

void BM_Enumerate(benchmark::State& s) {
  const ExtremumProblem p(2.5, 8, 0.05);
  for (auto _ : s) benchmark::DoNotOptimize(enumerate_critical_points_detailed(p, mode(s)).points.size());
  label(s);
}

void BM_Certify(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(certify_eq1(8.0, 20000, 1, mode(s)).min_value);
  label(s);
}

void BM_Scan(benchmark::State& s) {
  const auto lambdas = log_grid(1e-3, 1e3, 9);
  for (auto _ : s) benchmark::DoNotOptimize(scan({1.5, 3.0}, {2, 3}, lambdas, Direction::inf, {}, mode(s)).size());
  label(s);
}

}  // namespace

BENCHMARK(BM_Estimate)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Enumerate)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Certify)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Scan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
