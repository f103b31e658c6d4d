// SPDX-License-Identifier: Apache-2.0
//
// uowc-rte: a deterministic radiative-transfer channel solver for
// underwater optical wireless links.

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "uowc/montecarlo.hpp"
#include "uowc/scenario.hpp"

namespace uowc {

/// Received power against distance, raw and normalized, with the OOK error
/// probability of the raw power.
struct RteCurve {
  std::vector<double> distance;
  std::vector<double> power_w;
  std::vector<double> power_norm;
  std::vector<double> ber;
};

/// Full time-resolved receiver output: one row per time step over the output
/// columns.
struct TdSurface {
  std::vector<double> distance;  // nd
  std::vector<double> time;      // nt
  std::vector<double> power_norm;  // nt * nd, row-major in time
  std::vector<double> ber;         // nt * nd
};

struct McPoint {
  double distance = 0.0;
  double captured_fraction = 0.0;
  double std_error = 0.0;
  long n_photons = 0;
  std::uint64_t seed = 0;
  double wall_s = 0.0;
};

/// Prepared scenario: angular grid, weights, receiver geometry, source.
/// Construction validates the config and builds everything the solvers
/// share; the run methods are then independent of one another.
class ScenarioRun {
 public:
  explicit ScenarioRun(ScenarioConfig cfg);

  const ScenarioConfig& config() const { return cfg_; }
  const AngularGrid& angles() const { return angles_; }
  const WeightMatrix& weights() const { return weights_; }
  const FovDirections& fov() const { return fov_; }
  const std::vector<double>& areas() const { return areas_; }
  const SourceSpec& source() const { return source_; }

  int column_for_distance(double r) const;
  std::vector<int> output_columns() const;

  /// Stationary solution sampled at the output columns.
  RteCurve ti_curve();

  /// Time marching; returns the full surface and the time average over the
  /// trailing fraction of the horizon.
  std::pair<TdSurface, RteCurve> td_run(double average_window = 0.25,
                                        const std::function<void(int, int)>& progress = {});

  /// Photon-tracking points at the given receiver distances.
  std::vector<McPoint> mc_points(const std::vector<double>& distances);

  RteCurve curve_from_field(const RadianceField& field) const;

  struct Timings {
    double lloyd_s = 0.0;
    double weights_s = 0.0;
    double rte_s = 0.0;
    double mc_s = 0.0;
  };
  const Timings& timings() const { return timings_; }

  /// Executes the configured mode and writes CSV outputs, the manifest, and
  /// optional plots into the output directory. Returns the file list.
  std::vector<std::string> run_to_disk(bool verbose = false);

 private:
  ScenarioConfig cfg_;
  AngularGrid angles_;
  WeightMatrix weights_;
  FovDirections fov_;
  std::vector<double> areas_;
  SourceSpec source_;
  double norm_denom_ = 1.0;
  Timings timings_;
};

void write_ti_csv(const std::string& path, const RteCurve& curve);
void write_td_csv(const std::string& path, const TdSurface& surface);
void write_mc_csv(const std::string& path, const std::vector<McPoint>& points);
void write_compare_csv(const std::string& path, const RteCurve& rte,
                       const std::vector<McPoint>& mc);

/// Normalizes a positive series to its first entry.
std::vector<double> normalize_to_first(const std::vector<double>& values);

}  // namespace uowc
