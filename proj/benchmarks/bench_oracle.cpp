#include <benchmark/benchmark.h>

#include "xxchain/bath.hpp"
#include "xxchain/chain.hpp"
#include "xxchain/liouville.hpp"

namespace {

void BM_SteadyStateDensity(benchmark::State& state) {
  const auto chain = xxchain::build_boundary_perturbed(
      static_cast<int>(state.range(0)), 5.0, 1.0, 1.0);
  const auto model = xxchain::oracle::build_dense_model(chain);
  const xxchain::BathPair baths{xxchain::Temperature::finite(2.0),
                                xxchain::Temperature::finite(1.0)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        xxchain::oracle::steady_state_density(model, baths, 1.0));
  }
}
BENCHMARK(BM_SteadyStateDensity)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_BuildDenseModel(benchmark::State& state) {
  const auto chain = xxchain::build_boundary_perturbed(
      static_cast<int>(state.range(0)), 5.0, 1.0, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(xxchain::oracle::build_dense_model(chain));
  }
}
BENCHMARK(BM_BuildDenseModel)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace
