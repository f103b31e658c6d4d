// SPDX-License-Identifier: Apache-2.0
//
// uowc-rte: a deterministic radiative-transfer channel solver for
// underwater optical wireless links.

#include "uowc/receiver.hpp"

#include <cmath>
#include <sstream>

#include "uowc/errors.hpp"

namespace uowc {

namespace {

int ring_count(double dy, double aperture_radius) {
  if (!(dy > 0.0)) throw ConfigError("receiver: dy must be positive");
  if (aperture_radius < dy) {
    throw ConfigError("receiver: aperture radius must be at least one grid step dy");
  }
  return static_cast<int>(std::floor(aperture_radius / dy));
}

}  // namespace

std::vector<double> ring_areas(double dy, double aperture_radius) {
  const int count = ring_count(dy, aperture_radius);
  std::vector<double> areas(count);
  areas[0] = kPi * (0.5 * dy) * (0.5 * dy);
  for (int l = 1; l < count; ++l) {
    areas[l] = kTwoPi * dy * dy * l;
  }
  return areas;
}

std::vector<double> ring_areas_recurrence(double dy, double aperture_radius) {
  const int count = ring_count(dy, aperture_radius);
  std::vector<double> areas(count);
  double radius = 0.5 * dy;
  areas[0] = kPi * radius * radius;
  for (int l = 1; l < count; ++l) {
    radius += dy;
    areas[l] = kPi * radius * radius - areas[l - 1];
  }
  return areas;
}

std::vector<double> ring_areas(double dy, double aperture_radius, RingModel model) {
  return model == RingModel::kAnnulus ? ring_areas(dy, aperture_radius)
                                      : ring_areas_recurrence(dy, aperture_radius);
}

double received_power_at_column(const RadianceField& field, int column, const GridSpec& grid,
                                const std::vector<double>& areas, const FovDirections& fov) {
  if (column < 0 || column >= field.cols()) throw ConfigError("receiver column out of range");
  const int center = grid.center_row();
  const int rings = static_cast<int>(areas.size());
  if (center + rings > field.rows()) {
    std::ostringstream msg;
    msg << "receiver aperture exceeds the grid: needs rows up to " << (center + rings)
        << " of " << field.rows();
    throw ConfigError(msg.str());
  }
  double power = 0.0;
  for (int l = 0; l < rings; ++l) {
    const int row = center + l;
    double angular = 0.0;
    for (int p = 0; p < fov.count(); ++p) {
      angular += fov.gap[p] * field(row, column, fov.index[p]);
    }
    power += areas[l] * angular;
  }
  return power;
}

double received_power(const RadianceField& field, const GridSpec& grid,
                      const std::vector<double>& areas, const FovDirections& fov) {
  return received_power_at_column(field, field.cols() - 1, grid, areas, fov);
}

}  // namespace uowc
