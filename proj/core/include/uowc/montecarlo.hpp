// SPDX-License-Identifier: Apache-2.0
//
// uowc-rte: a deterministic radiative-transfer channel solver for
// underwater optical wireless links.

#pragma once

#include <cstdint>
#include <vector>

#include "uowc/grid.hpp"
#include "uowc/phase.hpp"
#include "uowc/receiver.hpp"
#include "uowc/water.hpp"

namespace uowc {

/// Tabulated CDF of the scattering angle with inverse lookup. The table is a
/// cumulative trapezoid of the density on a fine uniform grid, renormalized
/// to end at exactly 1.
class ScatterSampler {
 public:
  static constexpr int kMinResolution = 1 << 14;

  explicit ScatterSampler(const PhaseFunction& pf, int resolution = kMinResolution);

  /// Inverse CDF: quantile u in [0, 1) to a scattering angle.
  double sample(double u) const;

  /// Forward CDF at an angle inside the tabulated support.
  double cdf(double phi) const;

  int resolution() const { return static_cast<int>(angle_.size()); }
  double support_lo() const { return angle_.front(); }
  double support_hi() const { return angle_.back(); }

 private:
  std::vector<double> angle_;
  std::vector<double> cdf_;
};

struct McResult {
  double captured_fraction = 0.0;
  double std_error = 0.0;
  double absorbed_fraction = 0.0;
  double escaped_fraction = 0.0;
  long n_photons = 0;
  std::uint64_t seed = 0;
};

/// Planar photon tracking toward a receiver plane at x = distance.
/// Free paths are exponential with rate c; each interaction multiplies the
/// weight by the albedo (absorption tallied), with Russian roulette below
/// weight 1e-4; scattering angles come from the sampler. A photon ends at its
/// first plane crossing: captured when |y| <= aperture radius and its heading
/// lies inside the field of view, escaped otherwise. Deterministic for a
/// fixed seed regardless of thread count (per-photon counter-derived
/// streams, tallies merged in chunk order).
McResult trace_photons(long n_photons, const WaterOpticalProperties& water,
                       const ScatterSampler& sampler, const SourceSpec& source,
                       const ReceiverGeometry& receiver, double distance, std::uint64_t seed,
                       int threads = 0);

}  // namespace uowc
