#include <benchmark/benchmark.h>

#include "projsum/ensembles.hpp"
#include "projsum/spectra.hpp"

using namespace projsum;

static void BM_JacobiSpectrum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int beta = static_cast<int>(state.range(1));
  const EnsembleParams params(n, n / 4, n / 4, 1.0, beta);
  std::uint64_t r = 0;
  for (auto _ : state) {
    auto points = sample_jacobi_spectrum(params, SeedSpec{7, r++});
    benchmark::DoNotOptimize(points);
  }
}
BENCHMARK(BM_JacobiSpectrum)
    ->Args({128, 2})
    ->Args({256, 2})
    ->Args({512, 2})
    ->Args({1024, 2})
    ->Args({256, 1})
    ->Unit(benchmark::kMillisecond);

static void BM_SumMatrixEigenvalues(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const EnsembleParams params(n, n / 4, n / 4, 1.0, 2);
  std::uint64_t r = 0;
  for (auto _ : state) {
    auto eigs = self_adjoint_eigenvalues(sample_sum_matrix(params, SeedSpec{7, r++}));
    benchmark::DoNotOptimize(eigs);
  }
}
BENCHMARK(BM_SumMatrixEigenvalues)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

static void BM_GaussianSpanProjection(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t r = 0;
  for (auto _ : state) {
    auto p = sample_gaussian_span_projection(n, n / 4, 2, SeedSpec{7, r++});
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_GaussianSpanProjection)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
