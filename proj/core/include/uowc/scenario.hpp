// SPDX-License-Identifier: Apache-2.0
//
// uowc-rte: a deterministic radiative-transfer channel solver for
// underwater optical wireless links.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "uowc/angles.hpp"
#include "uowc/grid.hpp"
#include "uowc/link.hpp"
#include "uowc/phase.hpp"
#include "uowc/quadrature.hpp"
#include "uowc/receiver.hpp"
#include "uowc/solver.hpp"
#include "uowc/water.hpp"

namespace uowc {

enum class RunMode { kTd, kTi, kMc, kCompare };

std::string to_string(RunMode mode);
RunMode run_mode_from_string(const std::string& name);

/// One fully resolved run description. Everything a run needs is in here;
/// the manifest embeds it verbatim so rerunning a manifest reproduces the
/// outputs byte for byte.
struct ScenarioConfig {
  std::string water_preset;  // empty when coefficients are explicit
  WaterOpticalProperties water =
      WaterOpticalProperties::from_scattering_attenuation(0.91, 1.1);
  PhaseFunction psf = PhaseFunction::sthg(0.93);

  double refractive_index = 1.33;
  GridSpec grid;

  double source_power = 1.0;       // W
  double beam_waist = 1e-3;        // m
  double divergence = 0.026;       // rad

  double aperture_diameter = 0.10; // m; radius = diameter/2
  double fov_half_angle = kPi;
  RingModel ring_model = RingModel::kAnnulus;
  ReceiverElectronics electronics;

  int scheme_points = 7;
  int sub_points = 7;
  int directions = 22;
  LloydOptions lloyd;

  RunMode mode = RunMode::kTi;
  int ti_sweeps = 320;
  double ti_tolerance = 0.0;  // 0 disables the residual stop
  bool gauss_seidel = false;
  SourceScaling source_scaling = SourceScaling::kNone;
  bool allow_unstable = false;

  long mc_photons = 1000000;
  std::uint64_t seed = 20200814;
  int threads = 0;  // 0 = hardware concurrency
  std::vector<double> mc_distances;  // empty = derived default set

  std::string out_dir = "out";
  double start_distance = 0.5;  // m, first reported column
  bool emit_plots = false;
  bool dump_weights = false;
  bool dump_field = false;

  SourceSpec source() const {
    return SourceSpec::from_power(source_power, beam_waist, divergence);
  }
  ReceiverGeometry receiver() const {
    return ReceiverGeometry{0.5 * aperture_diameter, fov_half_angle, ring_model};
  }
  NcScheme scheme() const { return scheme_from_points(scheme_points); }

  /// Normalization constant for reported powers: S0 times the waist disc.
  double power_norm_denominator() const {
    return source().radiance * kPi * beam_waist * beam_waist;
  }

  /// Distances compared against the photon tracker; defaults to six columns
  /// spread over [start_distance + dx, x_max].
  std::vector<double> compare_distances() const;

  /// Throws ConfigError with one message per offending field.
  void validate() const;
};

/// Named water types.
std::vector<std::string> water_preset_names();
WaterOpticalProperties water_preset(const std::string& name);

ScenarioConfig config_from_json_text(const std::string& text);
std::string config_to_json_text(const ScenarioConfig& cfg);

/// Reads a config file; a run manifest is also accepted (its embedded
/// "config" object is used).
ScenarioConfig load_config_file(const std::string& path);

}  // namespace uowc
