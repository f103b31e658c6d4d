// SPDX-License-Identifier: Apache-2.0
//
// uowc-rte: a deterministic radiative-transfer channel solver for
// underwater optical wireless links.

#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "uowc/errors.hpp"
#include "uowc/math_util.hpp"

namespace uowc {

/// Space/time discretization of the tank. Rows (index i) run along y, the
/// transverse axis; columns (index j) run along x, the propagation axis.
struct GridSpec {
  double dx = 0.05;   // m
  double dy = 0.01;   // m
  double dt = 25e-12; // s
  double x_max = 2.95;  // m
  double y_max = 0.20;  // m
  double t_max = 20e-9; // s
  double v = kSpeedOfLight / 1.33;  // light celerity in the medium, m/s

  int rows() const { return static_cast<int>(std::floor(y_max / dy)) + 1; }       // I
  int cols() const { return static_cast<int>(std::floor(x_max / dx)) + 1; }       // J
  int time_steps() const { return static_cast<int>(std::floor(t_max / dt)) + 1; } // N
  int center_row() const { return (rows() - 1) / 2; }

  /// Explicit-marching stability number: v*dt*(2/(3dx) + 2/(3dy)) + c*v*dt.
  double cfl_number(double attenuation) const {
    return v * dt * (2.0 / (3.0 * dx) + 2.0 / (3.0 * dy)) + attenuation * v * dt;
  }

  void validate() const {
    if (!(dx > 0.0) || !(dy > 0.0) || !(dt > 0.0)) {
      throw ConfigError("grid: dx, dy, dt must be positive");
    }
    if (!(x_max > 0.0) || !(y_max > 0.0) || !(t_max > 0.0)) {
      throw ConfigError("grid: x_max, y_max, t_max must be positive");
    }
    if (!(v > 0.0)) throw ConfigError("grid: light celerity must be positive");
    if (rows() < 5 || cols() < 5) {
      throw ConfigError("grid: need at least 5 rows and 5 columns for the two-neighbor stencil");
    }
  }
};

/// Point source at the first column, mid row, radiating into the first
/// (near-forward) discrete direction.
struct SourceSpec {
  double radiance = 1.0;     // S0, W/m^2/rad
  double beam_waist = 1e-3;  // x0, m
  double divergence = 0.026; // omega, rad

  double focal_length() const { return -beam_waist / divergence; }

  /// S0 from a transmit power spread over the waist disc and the divergence
  /// wedge of full angle 2*omega.
  static SourceSpec from_power(double power_w, double beam_waist, double divergence) {
    if (!(power_w > 0.0)) throw ConfigError("source: power must be positive");
    if (!(beam_waist > 0.0)) throw ConfigError("source: beam waist must be positive");
    if (!(divergence > 0.0 && divergence < 0.5 * kPi)) {
      throw ConfigError("source: divergence half-angle must lie in (0, pi/2)");
    }
    SourceSpec s;
    s.beam_waist = beam_waist;
    s.divergence = divergence;
    s.radiance = power_w / (kPi * beam_waist * beam_waist * 2.0 * divergence);
    return s;
  }
};

/// One radiance snapshot: rows x cols x directions, W/m^2/rad.
class RadianceField {
 public:
  RadianceField() = default;
  RadianceField(int rows, int cols, int dirs)
      : rows_(rows), cols_(cols), dirs_(dirs),
        data_(static_cast<std::size_t>(rows) * cols * dirs, 0.0) {}

  double& operator()(int i, int j, int k) { return data_[idx(i, j, k)]; }
  double operator()(int i, int j, int k) const { return data_[idx(i, j, k)]; }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int dirs() const { return dirs_; }
  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

  /// Time index (explicit marching) or sweep count (fixed-point iteration).
  int index = 0;

 private:
  std::size_t idx(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * cols_ + j) * dirs_ + k;
  }
  int rows_ = 0, cols_ = 0, dirs_ = 0;
  std::vector<double> data_;
};

}  // namespace uowc
