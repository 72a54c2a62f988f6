#include <benchmark/benchmark.h>

#include "xxchain/chain.hpp"
#include "xxchain/spectral.hpp"

namespace {

void BM_Diagonalize(benchmark::State& state) {
  const auto chain = xxchain::build_boundary_perturbed(
      static_cast<int>(state.range(0)), 5.0, 1.0, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(xxchain::diagonalize(chain));
  }
}
BENCHMARK(BM_Diagonalize)->Arg(8)->Arg(50)->Arg(200)->Arg(500);

void BM_AnalyticSpectrum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(xxchain::analytic_spectrum(n, 5.0, 1.0));
  }
}
BENCHMARK(BM_AnalyticSpectrum)->Arg(50)->Arg(500);

}  // namespace
