// SPDX-License-Identifier: Apache-2.0
//
// Transport solver tests. The ballistic configuration (no scattering, one
// near-axis direction) has the Beer-Lambert law as an independent oracle.

#include <doctest.h>

#include <cmath>
#include <sstream>

#include "uowc/pipeline.hpp"
#include "uowc/receiver.hpp"
#include "uowc/solver.hpp"

using namespace uowc;

namespace {

AngularGrid ballistic_grid() {
  return AngularGrid::from_angles({1e-9, kPi / 2, kPi, 3 * kPi / 2});
}

WeightMatrix trivial_weights(const AngularGrid& grid) {
  return weight_matrix(PhaseFunction::sthg(0.0), grid, 7, NcScheme::kSevenPoint);
}

GridSpec mini_grid() {
  GridSpec g;
  g.dx = 0.05;
  g.dy = 0.01;
  g.x_max = 0.5;
  g.y_max = 0.2;
  g.t_max = 20e-9;
  g.dt = 25e-12;
  return g;
}

SourceSpec unit_source() {
  SourceSpec s;
  s.radiance = 1.0;
  return s;
}

}  // namespace

TEST_SUITE_BEGIN("solver");

TEST_CASE("zero field and zero source stay zero") {
  const GridSpec grid = mini_grid();
  const AngularGrid angles = ballistic_grid();
  const WeightMatrix w = trivial_weights(angles);
  const auto water = WaterOpticalProperties::from_scattering_attenuation(0.91, 1.1);
  SourceSpec zero = unit_source();
  zero.radiance = 0.0;

  RadianceField field(grid.rows(), grid.cols(), angles.count());
  for (int n = 0; n < 5; ++n) {
    field = td_step(field, grid, angles, w, water, zero);
    for (double v : field.data()) CHECK(v == 0.0);
  }
  const RadianceField ti = ti_solve(grid, angles, w, water, zero);
  for (double v : ti.data()) CHECK(v == 0.0);
}

TEST_CASE("first explicit step injects exactly v*dt*S0 at the source cell") {
  const GridSpec grid = mini_grid();
  const AngularGrid angles = ballistic_grid();
  const WeightMatrix w = trivial_weights(angles);
  const auto water = WaterOpticalProperties::from_scattering_attenuation(0.91, 1.1);
  const SourceSpec src = unit_source();

  RadianceField zero(grid.rows(), grid.cols(), angles.count());
  const RadianceField one = td_step(zero, grid, angles, w, water, src);
  const double expected = grid.v * grid.dt * src.radiance;
  for (int i = 0; i < grid.rows(); ++i) {
    for (int j = 0; j < grid.cols(); ++j) {
      for (int k = 0; k < angles.count(); ++k) {
        if (i == grid.center_row() && j == 0 && k == 0) {
          CHECK(one(i, j, k) == doctest::Approx(expected).epsilon(1e-15));
        } else {
          CHECK(one(i, j, k) == 0.0);
        }
      }
    }
  }
}

TEST_CASE("doubling the source radiance doubles every value") {
  const GridSpec grid = mini_grid();
  const auto pf = PhaseFunction::sthg(0.93);
  const AngularGrid angles = optimal_scattering_angles(pf, 8);
  const WeightMatrix w = weight_matrix(pf, angles, 7, NcScheme::kSevenPoint);
  const auto water = WaterOpticalProperties::from_scattering_attenuation(0.91, 1.1);
  SourceSpec src = unit_source();
  SourceSpec twice = src;
  twice.radiance *= 2.0;

  TiOptions opts;
  opts.max_sweeps = 60;
  const RadianceField a = ti_solve(grid, angles, w, water, src, opts);
  const RadianceField b = ti_solve(grid, angles, w, water, twice, opts);
  for (std::size_t n = 0; n < a.data().size(); ++n) {
    const double lhs = 2.0 * a.data()[n];
    const double rhs = b.data()[n];
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(std::abs(lhs), 1e-300));
  }

  RadianceField zero(grid.rows(), grid.cols(), angles.count());
  RadianceField ta = zero, tb = zero;
  for (int n = 0; n < 40; ++n) {
    ta = td_step(ta, grid, angles, w, water, src);
    tb = td_step(tb, grid, angles, w, water, twice);
  }
  for (std::size_t n = 0; n < ta.data().size(); ++n) {
    const double lhs = 2.0 * ta.data()[n];
    const double rhs = tb.data()[n];
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(std::abs(lhs), 1e-300));
  }
}

TEST_CASE("no scattering: power stays on the upwind-reachable side") {
  GridSpec grid = mini_grid();
  // One populated direction with xi > 0 and eta > 0: influence can only
  // move to larger i and larger j.
  const AngularGrid angles = AngularGrid::from_angles({0.3, kPi / 2 + 0.2, kPi + 0.1, 3 * kPi / 2});
  const WeightMatrix w = trivial_weights(angles);
  const auto water = WaterOpticalProperties::from_absorption_scattering(1.0, 0.0);
  const SourceSpec src = unit_source();

  RadianceField field(grid.rows(), grid.cols(), angles.count());
  for (int n = 0; n < 200; ++n) field = td_step(field, grid, angles, w, water, src);

  const int src_row = grid.center_row();
  for (int i = 0; i < grid.rows(); ++i) {
    for (int j = 0; j < grid.cols(); ++j) {
      for (int k = 1; k < angles.count(); ++k) CHECK(field(i, j, k) == 0.0);
      if (i < src_row) CHECK(field(i, j, 0) == 0.0);
    }
  }
  CHECK(field(src_row, 0, 0) > 0.0);
  CHECK(field(src_row + 2, 2, 0) > 0.0);  // the plume spreads up and forward
}

TEST_CASE("ballistic stationary decay matches Beer-Lambert within 5 percent") {
  GridSpec grid;
  grid.dx = 0.01;
  grid.dy = 0.01;
  grid.x_max = 3.0;
  grid.y_max = 0.04;
  const auto water = WaterOpticalProperties::from_absorption_scattering(1.0, 0.0);
  const AngularGrid angles = ballistic_grid();
  const WeightMatrix w = trivial_weights(angles);
  const SourceSpec src = unit_source();

  TiOptions opts;
  opts.max_sweeps = 500;
  const RadianceField field = ti_solve(grid, angles, w, water, src, opts);

  const auto areas = ring_areas(grid.dy, grid.dy);
  const auto fov = discretize_fov(angles, kPi);
  const double r0 = 0.5;
  const int j0 = static_cast<int>(std::lround(r0 / grid.dx));
  const double p0 = received_power_at_column(field, j0, grid, areas, fov);
  REQUIRE(p0 > 0.0);
  for (double r : {1.0, 1.5, 2.0, 2.5, 3.0}) {
    const int j = static_cast<int>(std::lround(r / grid.dx));
    const double p = received_power_at_column(field, j, grid, areas, fov);
    const double expected = std::exp(-water.attenuation * (r - r0));
    CHECK(std::abs(p / p0 - expected) <= 0.05 * expected);
  }
}

TEST_CASE("trailing time average of the marching solution matches the stationary solve") {
  const GridSpec grid = mini_grid();
  const auto pf = PhaseFunction::sthg(0.93);
  const AngularGrid angles = optimal_scattering_angles(pf, 8);
  const WeightMatrix w = weight_matrix(pf, angles, 7, NcScheme::kSevenPoint);
  const auto water = WaterOpticalProperties::from_scattering_attenuation(0.91, 1.1);
  const SourceSpec src = unit_source();

  const auto areas = ring_areas(grid.dy, 0.05);
  const auto fov = discretize_fov(angles, kPi);

  const int steps = grid.time_steps();
  const int avg_from = static_cast<int>(std::ceil(0.75 * (steps - 1)));
  std::vector<double> avg(grid.cols(), 0.0);
  int count = 0;
  RadianceField field(grid.rows(), grid.cols(), angles.count());
  for (int n = 1; n < steps; ++n) {
    field = td_step(field, grid, angles, w, water, src);
    if (n >= avg_from) {
      for (int j = 0; j < grid.cols(); ++j) {
        avg[j] += received_power_at_column(field, j, grid, areas, fov);
      }
      ++count;
    }
  }

  const RadianceField ti = ti_solve(grid, angles, w, water, src);
  for (int j = 2; j < grid.cols(); ++j) {
    const double td_avg = avg[j] / count;
    const double ti_p = received_power_at_column(ti, j, grid, areas, fov);
    CHECK(std::abs(td_avg - ti_p) <= 0.02 * ti_p);
  }
}

TEST_CASE("jacobi and gauss-seidel converge to the same fixed point") {
  const GridSpec grid = mini_grid();
  const auto pf = PhaseFunction::sthg(0.93);
  const AngularGrid angles = optimal_scattering_angles(pf, 8);
  const WeightMatrix w = weight_matrix(pf, angles, 7, NcScheme::kSevenPoint);
  const auto water = WaterOpticalProperties::from_scattering_attenuation(0.91, 1.1);
  const SourceSpec src = unit_source();

  TiOptions jac;
  jac.max_sweeps = 600;
  TiOptions gs = jac;
  gs.gauss_seidel = true;
  const RadianceField a = ti_solve(grid, angles, w, water, src, jac);
  const RadianceField b = ti_solve(grid, angles, w, water, src, gs);
  for (std::size_t n = 0; n < a.data().size(); ++n) {
    CHECK(a.data()[n] == doctest::Approx(b.data()[n]).epsilon(1e-8));
  }
}

TEST_CASE("source scaling switch multiplies the stationary field by c") {
  const GridSpec grid = mini_grid();
  const AngularGrid angles = ballistic_grid();
  const WeightMatrix w = trivial_weights(angles);
  const auto water = WaterOpticalProperties::from_scattering_attenuation(0.91, 1.1);
  const SourceSpec src = unit_source();

  TiOptions none;
  none.max_sweeps = 50;
  TiOptions timesc = none;
  timesc.source_scaling = SourceScaling::kTimesC;
  const RadianceField a = ti_solve(grid, angles, w, water, src, none);
  const RadianceField b = ti_solve(grid, angles, w, water, src, timesc);
  for (std::size_t n = 0; n < a.data().size(); ++n) {
    if (a.data()[n] > 0.0) {
      CHECK(b.data()[n] / a.data()[n] == doctest::Approx(water.attenuation).epsilon(1e-12));
    }
  }
}

TEST_CASE("cfl guard refuses unstable marching unless overridden") {
  GridSpec grid = mini_grid();
  grid.dt = 1e-9;  // far past the stability limit
  const AngularGrid angles = ballistic_grid();
  const WeightMatrix w = trivial_weights(angles);
  const auto water = WaterOpticalProperties::from_scattering_attenuation(0.91, 1.1);
  const SourceSpec src = unit_source();
  CHECK(grid.cfl_number(water.attenuation) >= 1.0);

  RadianceField zero(grid.rows(), grid.cols(), angles.count());
  CHECK_THROWS_AS((void)td_step(zero, grid, angles, w, water, src), InstabilityError);
  try {
    (void)td_step(zero, grid, angles, w, water, src);
  } catch (const InstabilityError& e) {
    CHECK(e.cfl_number() >= 1.0);
    CHECK(std::string(e.what()).find("CFL") != std::string::npos);
  }

  TdOptions force;
  force.allow_unstable = true;
  CHECK_NOTHROW((void)td_step(zero, grid, angles, w, water, src, force));
}

TEST_CASE("snapshot csv format") {
  RadianceField field(2, 2, 2);
  field(0, 0, 0) = 1.5;
  std::ostringstream out;
  write_csv(field, out);
  const std::string text = out.str();
  CHECK(text.rfind("i,j,k,value\n", 0) == 0);
  CHECK(text.find("1,1,1,1.5\n") != std::string::npos);
}

TEST_SUITE_END();
