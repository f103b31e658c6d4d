// SPDX-License-Identifier: Apache-2.0
//
// uowc-rte: a deterministic radiative-transfer channel solver for
// underwater optical wireless links.

#pragma once

#include <vector>

#include "uowc/phase.hpp"

namespace uowc {

/// K optimized scattering directions with their decision thresholds and
/// direction cosines. Immutable once built; share freely across threads.
struct AngularGrid {
  std::vector<double> phi;         // K angles, strictly increasing, in [0, 2pi)
  std::vector<double> thresholds;  // K+1 values d_0..d_K, d_0 = 0
  std::vector<double> xi;          // cos(phi_k)
  std::vector<double> eta;         // sin(phi_k)
  double mse = 0.0;                // quantization MSE of the returned grid
  bool converged = false;
  int iterations = 0;
  std::vector<double> mse_history;  // one entry per iteration when recorded

  int count() const { return static_cast<int>(phi.size()); }

  /// Gap to the next direction; the last direction wraps to phi_0 + 2pi.
  double gap_after(int k) const;

  /// Builds a grid directly from a sorted list of angles (thresholds derived
  /// the same way as the optimizer's). Intended for synthetic grids in
  /// diagnostics; the production path is optimal_scattering_angles().
  static AngularGrid from_angles(std::vector<double> angles);
};

struct LloydOptions {
  double epsilon = 1e-8;   // max angle movement for convergence
  int max_iterations = 550;
  bool record_mse = false;
  double integral_tol = 1e-10;  // absolute tolerance of the cell integrals
};

/// Minimum-MSE non-uniform angular quantizer: alternates midpoint thresholds
/// and density centroids from a uniform start until angles stop moving.
/// K must be even and at least 4.
AngularGrid optimal_scattering_angles(const PhaseFunction& pf, int K,
                                      const LloydOptions& opts = {});

/// One threshold+centroid update applied to an existing set of angles.
std::vector<double> lloyd_step(const PhaseFunction& pf, const std::vector<double>& phi,
                               double integral_tol = 1e-10);

/// Quantization MSE of a given angle set against the density.
double lloyd_mse(const PhaseFunction& pf, const std::vector<double>& phi,
                 double integral_tol = 1e-10);

/// Directions of a grid that fall inside the receiver field of view.
/// Selection keeps grid angles in [0, fov_half_angle], the upper half of the
/// acceptance cone about the +x axis; rows below the beam axis are accounted
/// for by elevation symmetry on the receiver side.
struct FovDirections {
  std::vector<int> index;   // indices into the grid (0-based)
  std::vector<double> phi;  // selected angles
  std::vector<double> gap;  // gap to the next grid direction
  int count() const { return static_cast<int>(index.size()); }
};

FovDirections discretize_fov(const AngularGrid& grid, double fov_half_angle);

}  // namespace uowc
