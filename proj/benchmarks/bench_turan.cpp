#include <benchmark/benchmark.h>

#include "turan/bessel.hpp"
#include "turan/bounds.hpp"
#include "turan/quadrature.hpp"
#include "turan/turanian.hpp"
#include "turan/verify.hpp"

using namespace turan;

namespace {

void BM_SeriesReal(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(delta_series_real(2.3, x, 1e-12));
}
BENCHMARK(BM_SeriesReal)->Arg(1)->Arg(10)->Arg(100);

void BM_SeriesInteger(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(delta_series_integer(3, x, 1e-12));
}
BENCHMARK(BM_SeriesInteger)->Arg(1)->Arg(10)->Arg(100);

void BM_Direct(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(delta_direct(2.3, 5.0, 1e-12));
}
BENCHMARK(BM_Direct);

void BM_Fourier(benchmark::State& state) {
  const QuadratureRule& rule = gauss_legendre(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(delta_fourier(3, 5.0, rule));
}
BENCHMARK(BM_Fourier)->Arg(16)->Arg(64)->Arg(256);

void BM_Neumann(benchmark::State& state) {
  const QuadratureRule& rule = gauss_legendre(64);
  const double nu = state.range(0) == 0 ? -0.4 : 1.0;
  for (auto _ : state) benchmark::DoNotOptimize(delta_neumann(nu, 5.0, rule));
}
BENCHMARK(BM_Neumann)->Arg(0)->Arg(1);

void BM_GaussLegendreLookup(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(detail::gauss_legendre_any(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GaussLegendreLookup)->Arg(64)->Arg(512);

void BM_BesselZeros(benchmark::State& state) {
  const int count = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bessel_j_zeros(1.0, count));
}
BENCHMARK(BM_BesselZeros)->Arg(50)->Arg(500)->Unit(benchmark::kMillisecond);

void BM_EvaluateAll(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_all(4.0, 3.0, 1e-12));
}
BENCHMARK(BM_EvaluateAll);

void BM_CertifyCrossDefault(benchmark::State& state) {
  const GridSpec grid = GridSpec::default_grid();
  for (auto _ : state) benchmark::DoNotOptimize(certify_cross_method(grid, 1e-12));
}
BENCHMARK(BM_CertifyCrossDefault)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
