#include <benchmark/benchmark.h>

#include "xxchain/bath.hpp"
#include "xxchain/chain.hpp"
#include "xxchain/spectral.hpp"
#include "xxchain/transport.hpp"

namespace {

void BM_RectifyPoint(benchmark::State& state) {
  const auto chain = xxchain::build_field_junction(
      static_cast<int>(state.range(0)), 2.0, -3.0, 1.0, 1.0);
  const xxchain::BathPair baths{xxchain::Temperature::finite(7.5),
                                xxchain::Temperature::finite(2.5)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(xxchain::rectify(chain, baths));
  }
}
BENCHMARK(BM_RectifyPoint)->Arg(10)->Arg(50)->Arg(100);

void BM_EnergyCurrent(benchmark::State& state) {
  const auto spec = xxchain::diagonalize(xxchain::build_boundary_perturbed(
      static_cast<int>(state.range(0)), 5.0, 1.0, 1.0));
  const xxchain::BathPair baths{xxchain::Temperature::finite(7.5),
                                xxchain::Temperature::finite(2.5)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(xxchain::energy_current(spec, baths, 1.0));
  }
}
BENCHMARK(BM_EnergyCurrent)->Arg(50)->Arg(500);

void BM_LimitCurrentSums(benchmark::State& state) {
  const auto spec = xxchain::diagonalize(
      xxchain::build_boundary_perturbed(500, 1.0, 16.0, 1.0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(xxchain::limit_current_sums(spec, 1.0));
  }
}
BENCHMARK(BM_LimitCurrentSums);

}  // namespace
