// SPDX-License-Identifier: Apache-2.0
//
// Weight-matrix build cost across panel schemes and direction counts. At the
// published sub-point choices the 7-point scheme needs the fewest density
// evaluations per interval, so it should come out fastest.

#include <benchmark/benchmark.h>

#include <map>

#include "uowc/quadrature.hpp"

namespace {

const uowc::AngularGrid& grid_for(int k) {
  static std::map<int, uowc::AngularGrid> cache;
  auto it = cache.find(k);
  if (it == cache.end()) {
    it = cache.emplace(k, uowc::optimal_scattering_angles(uowc::PhaseFunction::sthg(0.93), k))
             .first;
  }
  return it->second;
}

void BM_WeightMatrix(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const int scheme_points = static_cast<int>(state.range(1));
  const int m = static_cast<int>(state.range(2));
  const auto pf = uowc::PhaseFunction::sthg(0.93);
  const auto& grid = grid_for(k);
  const auto scheme = uowc::scheme_from_points(scheme_points);
  for (auto _ : state) {
    benchmark::DoNotOptimize(uowc::weight_matrix(pf, grid, m, scheme));
  }
}

}  // namespace

BENCHMARK(BM_WeightMatrix)
    ->Args({22, 3, 50})
    ->Args({22, 5, 40})
    ->Args({22, 7, 7})
    ->Args({50, 3, 50})
    ->Args({50, 5, 40})
    ->Args({50, 7, 7});

BENCHMARK_MAIN();
