#include <benchmark/benchmark.h>

#include "projsum/specfun.hpp"

using namespace projsum;

static void BM_BesselJ(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bessel_j(BesselOrder(1.5), x));
}
BENCHMARK(BM_BesselJ)->Arg(2)->Arg(10)->Arg(30);

static void BM_CdKernelDiag(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const JacobiParams params(n, 1.0, 0.0);
  const RecurrenceTable table = jacobi_recurrence(params);
  double x = 0.0;
  for (auto _ : state) {
    x += 1.0 / 4096.0;
    if (x >= 1.0) x = 1.0 / 4096.0;
    benchmark::DoNotOptimize(cd_kernel(table, params, x, x));
  }
}
BENCHMARK(BM_CdKernelDiag)->Arg(20)->Arg(200);

static void BM_HardEdgeCountComplex(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hard_edge_count_complex(0, 1.0));
}
BENCHMARK(BM_HardEdgeCountComplex)->Unit(benchmark::kMicrosecond);

static void BM_HardEdgeCountReal(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hard_edge_count_real(0, 1.0));
}
BENCHMARK(BM_HardEdgeCountReal)->Unit(benchmark::kMillisecond);
