// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "uowc/montecarlo.hpp"
#include "uowc/solver.hpp"

namespace {

struct Setup {
  uowc::GridSpec grid;
  uowc::AngularGrid angles;
  uowc::WeightMatrix weights;
  uowc::WaterOpticalProperties water;
  uowc::SourceSpec source;

  Setup()
      : angles(uowc::optimal_scattering_angles(uowc::PhaseFunction::sthg(0.93), 22)),
        weights(uowc::weight_matrix(uowc::PhaseFunction::sthg(0.93), angles, 7,
                                    uowc::NcScheme::kSevenPoint)),
        water(uowc::WaterOpticalProperties::from_scattering_attenuation(0.91, 1.1)) {
    grid.x_max = 1.0;
    source.radiance = 1.0;
  }
};

const Setup& setup() {
  static Setup s;
  return s;
}

void BM_TiSolve(benchmark::State& state) {
  const auto& s = setup();
  uowc::TiOptions opts;
  opts.max_sweeps = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        uowc::ti_solve(s.grid, s.angles, s.weights, s.water, s.source, opts));
  }
}

void BM_TdStep(benchmark::State& state) {
  const auto& s = setup();
  uowc::RadianceField field(s.grid.rows(), s.grid.cols(), s.angles.count());
  field = uowc::td_step(field, s.grid, s.angles, s.weights, s.water, s.source);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        uowc::td_step(field, s.grid, s.angles, s.weights, s.water, s.source));
  }
}

void BM_TracePhotons(benchmark::State& state) {
  const auto& s = setup();
  const uowc::ScatterSampler sampler(uowc::PhaseFunction::sthg(0.93));
  uowc::ReceiverGeometry rx;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        uowc::trace_photons(10000, s.water, sampler, s.source, rx, 1.5, 42, 1));
  }
}

}  // namespace

BENCHMARK(BM_TiSolve)->Arg(40)->Arg(320)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TdStep)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_TracePhotons)->Unit(benchmark::kMillisecond);
