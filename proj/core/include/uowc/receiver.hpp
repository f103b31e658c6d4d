// SPDX-License-Identifier: Apache-2.0
//
// uowc-rte: a deterministic radiative-transfer channel solver for
// underwater optical wireless links.

#pragma once

#include <vector>

#include "uowc/angles.hpp"
#include "uowc/grid.hpp"
#include "uowc/math_util.hpp"

namespace uowc {

/// How the aperture disc is split into concentric rings.
enum class RingModel {
  kAnnulus,     // closed-form ring areas
  kRecurrence,  // the reference implementation's alternating recurrence
};

struct ReceiverGeometry {
  double aperture_radius = 0.05;   // R, m
  double fov_half_angle = kPi;     // acceptance about the +x axis
  RingModel ring_model = RingModel::kAnnulus;
};

/// Ring areas A_1..A_L with L = floor(R/dy): a centre disc of radius dy/2
/// followed by annuli of width dy centred at radii (l-1)*dy.
std::vector<double> ring_areas(double dy, double aperture_radius);

/// The reference recurrence s_l = pi*r_l^2 - s_{l-1}; kept for comparison.
std::vector<double> ring_areas_recurrence(double dy, double aperture_radius);

std::vector<double> ring_areas(double dy, double aperture_radius, RingModel model);

/// Received power at one column: rings above the beam axis weighted by ring
/// area, directions restricted to the field of view, gaps as angular measure.
double received_power_at_column(const RadianceField& field, int column, const GridSpec& grid,
                                const std::vector<double>& areas, const FovDirections& fov);

/// Received power at the last column (the receiver plane).
double received_power(const RadianceField& field, const GridSpec& grid,
                      const std::vector<double>& areas, const FovDirections& fov);

}  // namespace uowc
