#include <benchmark/benchmark.h>

#include "g2coh/fock_oracle.hpp"
#include "g2coh/g2_core.hpp"
#include "g2coh/overlap_engine.hpp"
#include "g2coh/sweep_analysis.hpp"

using namespace g2coh;

namespace {

ScenarioSpec scenario(SpectralModel model) {
  return ScenarioSpec::uniform(model, 5e14, 1e12, 1.5e-12, 4.875e14, 0.8e12, 0.5e-12);
}

void BM_OverlapClosedForm(benchmark::State& state) {
  const auto s = scenario(static_cast<SpectralModel>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compute_overlap_set(s, OverlapMethod::ClosedForm));
}
BENCHMARK(BM_OverlapClosedForm)
    ->Arg(static_cast<int>(SpectralModel::Gaussian))
    ->Arg(static_cast<int>(SpectralModel::LorentzianCausal));

void BM_OverlapQuadrature(benchmark::State& state) {
  const auto s = scenario(static_cast<SpectralModel>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compute_overlap_set(s, OverlapMethod::Quadrature));
}
BENCHMARK(BM_OverlapQuadrature)
    ->Arg(static_cast<int>(SpectralModel::Gaussian))
    ->Arg(static_cast<int>(SpectralModel::LorentzianCausal))
    ->Unit(benchmark::kMicrosecond);

void BM_G2FromOverlaps(benchmark::State& state) {
  const OverlapSet J = compute_overlap_set(scenario(SpectralModel::Gaussian), OverlapMethod::ClosedForm);
  for (auto _ : state) benchmark::DoNotOptimize(g2_from_overlaps(J));
}
BENCHMARK(BM_G2FromOverlaps);

void BM_FockOracle(benchmark::State& state) {
  const auto s = scenario(SpectralModel::Gaussian);
  const auto modes = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle_g2(s, modes));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FockOracle)->RangeMultiplier(2)->Range(256, 2048)->Unit(benchmark::kMillisecond)->Complexity();

void BM_GammaSweep(benchmark::State& state) {
  SweepGrid grid;
  grid.base = ScenarioSpec::uniform(SpectralModel::Gaussian, 5e14, 1e12, 2.5e-12, 4.5e14, 1e12, 0.0);
  grid.axis = SweepAxis::Gamma;
  grid.start = 0.0;
  grid.stop = 5e12;
  grid.points = 500;
  const auto workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(grid, workers));
}
BENCHMARK(BM_GammaSweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
