// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "uowc/receiver.hpp"
#include "uowc/rng.hpp"

using namespace uowc;

namespace {

GridSpec small_grid() {
  GridSpec g;
  g.dx = 0.05;
  g.dy = 0.01;
  g.x_max = 0.5;
  g.y_max = 0.2;
  return g;
}

AngularGrid four_dirs() { return AngularGrid::from_angles({0.05, kPi / 2, kPi, 3 * kPi / 2}); }

}  // namespace

TEST_SUITE_BEGIN("receiver");

TEST_CASE("ring areas follow the closed form") {
  const auto areas = ring_areas(0.01, 0.05);
  REQUIRE(areas.size() == 5);
  CHECK(areas[0] == doctest::Approx(7.853981633974483e-5).epsilon(1e-12));
  CHECK(areas[1] == doctest::Approx(6.283185307179586e-4).epsilon(1e-12));
  for (std::size_t l = 2; l < areas.size(); ++l) {
    CHECK(areas[l] == doctest::Approx(kTwoPi * 1e-4 * l).epsilon(1e-12));
    CHECK(areas[l] > 0.0);
  }
}

TEST_CASE("single-disc aperture and domain errors") {
  const auto one = ring_areas(0.01, 0.01);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == doctest::Approx(kPi * 0.005 * 0.005));
  CHECK_THROWS_AS(ring_areas(0.01, 0.005), ConfigError);
}

TEST_CASE("ring sums are close to but not equal to the disc area") {
  // The closed-form rings tile a disc of radius R - dy/2, not R. Logged as a
  // numeric fact; deliberately not asserted equal.
  const double dy = 0.01, radius = 0.05;
  const auto areas = ring_areas(dy, radius);
  double sum = 0.0;
  for (double a : areas) sum += a;
  const double disc = kPi * radius * radius;
  const double shrunk = kPi * (radius - 0.5 * dy) * (radius - 0.5 * dy);
  CHECK(sum == doctest::Approx(shrunk).epsilon(1e-12));
  CHECK(sum < disc);

  // The recurrence agrees on the first two rings (the subtracted term is
  // still the full inner disc there) and drifts from the third on.
  const auto rec = ring_areas_recurrence(dy, radius);
  REQUIRE(rec.size() == areas.size());
  CHECK(rec[0] == doctest::Approx(areas[0]));
  CHECK(rec[1] == doctest::Approx(areas[1]));
  CHECK(rec[2] == doctest::Approx(4.25 * kPi * dy * dy).epsilon(1e-12));
  CHECK(std::abs(rec[2] - areas[2]) > 0.05 * areas[2]);
}

TEST_CASE("zero field gives zero power; uniform field factorizes") {
  const GridSpec grid = small_grid();
  const AngularGrid angles = four_dirs();
  const FovDirections fov = discretize_fov(angles, kPi);
  const auto areas = ring_areas(grid.dy, 0.05);

  RadianceField field(grid.rows(), grid.cols(), angles.count());
  CHECK(received_power(field, grid, areas, fov) == 0.0);

  const double level = 3.25;
  for (double& v : field.data()) v = level;
  double area_sum = 0.0;
  for (double a : areas) area_sum += a;
  double gap_sum = 0.0;
  for (double g : fov.gap) gap_sum += g;
  const double expected = level * area_sum * gap_sum;
  CHECK(received_power(field, grid, areas, fov) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("monotone in aperture, fov, and linear in the field") {
  const GridSpec grid = small_grid();
  const AngularGrid angles = four_dirs();
  RadianceField field(grid.rows(), grid.cols(), angles.count());
  SplitMix64 rng(99);
  for (double& v : field.data()) v = rng.next_double();

  double prev = 0.0;
  for (double radius : {0.01, 0.02, 0.03, 0.05}) {
    const double p = received_power(field, grid, ring_areas(grid.dy, radius),
                                    discretize_fov(angles, kPi));
    CHECK(p >= prev);
    prev = p;
  }

  prev = 0.0;
  for (double fov : {0.1, kPi / 2, kPi}) {
    const double p =
        received_power(field, grid, ring_areas(grid.dy, 0.05), discretize_fov(angles, fov));
    CHECK(p >= prev);
    prev = p;
  }

  const auto areas = ring_areas(grid.dy, 0.05);
  const auto fov = discretize_fov(angles, kPi);
  const double base = received_power(field, grid, areas, fov);
  RadianceField scaled = field;
  for (double& v : scaled.data()) v *= 2.0;
  CHECK(received_power(scaled, grid, areas, fov) == doctest::Approx(2.0 * base).epsilon(1e-14));
}

TEST_CASE("aperture exceeding the grid height is rejected") {
  GridSpec grid = small_grid();
  grid.y_max = 0.04;  // 5 rows, center row 2
  const AngularGrid angles = four_dirs();
  RadianceField field(grid.rows(), grid.cols(), angles.count());
  const auto fov = discretize_fov(angles, kPi);
  CHECK_THROWS_AS(
      received_power(field, grid, ring_areas(grid.dy, 0.05), fov), ConfigError);
}

TEST_SUITE_END();
