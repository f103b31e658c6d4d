// SPDX-License-Identifier: Apache-2.0
//
// uowc-rte: a deterministic radiative-transfer channel solver for
// underwater optical wireless links.

#include "uowc/solver.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <sstream>
#include <vector>

namespace uowc {

namespace {

// Per-direction stencil data: upwind side and the magnitude coefficients of
// the two-neighbor derivative.
struct DirectionSet {
  std::vector<double> aeta, axi;  // |eta|, |xi|
  std::vector<int> step_i, step_j;  // upwind neighbor offsets (+1 or -1)

  DirectionSet(const AngularGrid& angles) {
    const int k = angles.count();
    aeta.resize(k);
    axi.resize(k);
    step_i.resize(k);
    step_j.resize(k);
    for (int d = 0; d < k; ++d) {
      aeta[d] = std::abs(angles.eta[d]);
      axi[d] = std::abs(angles.xi[d]);
      step_i[d] = angles.eta[d] > 0.0 ? -1 : +1;
      step_j[d] = angles.xi[d] > 0.0 ? -1 : +1;
    }
  }
};

// Sum of the one or two upwind neighbors that exist; cells with no in-grid
// neighbor contribute nothing to the derivative.
inline double neighbor_sum(const std::vector<double>& data, int i, int j, int k, int di, int dj,
                           int rows, int cols, int dirs) {
  double sum = 0.0;
  const int i1 = i + di, j1 = j + dj;
  if (i1 >= 0 && i1 < rows && j1 >= 0 && j1 < cols) {
    sum += data[(static_cast<std::size_t>(i1) * cols + j1) * dirs + k];
    const int i2 = i + 2 * di, j2 = j + 2 * dj;
    if (i2 >= 0 && i2 < rows && j2 >= 0 && j2 < cols) {
      sum += data[(static_cast<std::size_t>(i2) * cols + j2) * dirs + k];
    }
  }
  return sum;
}

void check_compatible(const GridSpec& grid, const AngularGrid& angles, const WeightMatrix& w) {
  if (w.directions != angles.count()) {
    throw ConfigError("weight matrix and angular grid disagree on direction count");
  }
  grid.validate();
}

}  // namespace

RadianceField td_step(const RadianceField& field, const GridSpec& grid, const AngularGrid& angles,
                      const WeightMatrix& w, const WaterOpticalProperties& water,
                      const SourceSpec& src, const TdOptions& opts) {
  check_compatible(grid, angles, w);
  const int rows = grid.rows(), cols = grid.cols(), dirs = angles.count();
  if (field.rows() != rows || field.cols() != cols || field.dirs() != dirs) {
    throw ConfigError("field dimensions do not match the grid");
  }

  const double cfl = grid.cfl_number(water.attenuation);
  if (cfl >= 1.0 && !opts.allow_unstable) {
    std::ostringstream msg;
    msg << "explicit marching refused: CFL number " << cfl << " >= 1";
    throw InstabilityError(msg.str(), cfl);
  }

  const DirectionSet ds(angles);
  const double vdt = grid.v * grid.dt;
  const double bq = water.scattering * vdt;
  std::vector<double> keep(dirs), cy(dirs), cx(dirs);
  for (int k = 0; k < dirs; ++k) {
    cy[k] = ds.aeta[k] * vdt / (3.0 * grid.dy);
    cx[k] = ds.axi[k] * vdt / (3.0 * grid.dx);
    keep[k] = 1.0 - water.attenuation * vdt - 2.0 * cy[k] - 2.0 * cx[k];
  }
  const double source_term =
      vdt * src.radiance * (opts.source_scaling == SourceScaling::kTimesC ? water.attenuation : 1.0);

  RadianceField out(rows, cols, dirs);
  const std::vector<double>& in = field.data();
  std::vector<double>& res = out.data();

  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      const std::size_t base = (static_cast<std::size_t>(i) * cols + j) * dirs;
      const double* cell = in.data() + base;
      double* outc = res.data() + base;
      for (int k = 0; k < dirs; ++k) {
        const double* wrow = w.row(k);
        double scatter = 0.0;
        for (int ks = 0; ks < dirs; ++ks) scatter += wrow[ks] * cell[ks];
        const double nb_i = neighbor_sum(in, i, j, k, ds.step_i[k], 0, rows, cols, dirs);
        const double nb_j = neighbor_sum(in, i, j, k, 0, ds.step_j[k], rows, cols, dirs);
        outc[k] = keep[k] * cell[k] + cy[k] * nb_i + cx[k] * nb_j + bq * scatter;
      }
    }
  }
  out(grid.center_row(), 0, 0) += source_term;

  for (double v : res) {
    if (v < 0.0 || !std::isfinite(v)) {
      std::ostringstream msg;
      msg << "unstable explicit step: radiance left [0, inf) at CFL number " << cfl;
      throw InstabilityError(msg.str(), cfl);
    }
  }
  out.index = field.index + 1;
  return out;
}

RadianceField td_solve(const GridSpec& grid, const AngularGrid& angles, const WeightMatrix& w,
                       const WaterOpticalProperties& water, const SourceSpec& src,
                       const TdOptions& opts,
                       const std::function<void(int, const RadianceField&)>& observer) {
  check_compatible(grid, angles, w);
  const int steps = grid.time_steps();
  RadianceField field(grid.rows(), grid.cols(), angles.count());
  if (observer) observer(0, field);
  for (int n = 1; n < steps; ++n) {
    field = td_step(field, grid, angles, w, water, src, opts);
    if (observer) observer(n, field);
  }
  return field;
}

RadianceField ti_solve(const GridSpec& grid, const AngularGrid& angles, const WeightMatrix& w,
                       const WaterOpticalProperties& water, const SourceSpec& src,
                       const TiOptions& opts) {
  check_compatible(grid, angles, w);
  const int rows = grid.rows(), cols = grid.cols(), dirs = angles.count();

  const DirectionSet ds(angles);
  std::vector<double> denom(dirs), cy(dirs), cx(dirs);
  for (int k = 0; k < dirs; ++k) {
    cy[k] = ds.aeta[k] / (3.0 * grid.dy);
    cx[k] = ds.axi[k] / (3.0 * grid.dx);
    denom[k] = 2.0 * cy[k] + 2.0 * cx[k] + water.attenuation;
  }
  const double b = water.scattering;
  const double source_term =
      src.radiance * (opts.source_scaling == SourceScaling::kTimesC ? water.attenuation : 1.0);
  const int src_i = grid.center_row();

  RadianceField cur(rows, cols, dirs);
  RadianceField next(rows, cols, dirs);

  double prev_residual = std::numeric_limits<double>::infinity();
  int growth_streak = 0;
  int sweep = 0;
  for (; sweep < opts.max_sweeps; ++sweep) {
    const std::vector<double>& in = cur.data();
    std::vector<double>& out = opts.gauss_seidel ? cur.data() : next.data();
    double residual = 0.0;

    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) {
        const std::size_t base = (static_cast<std::size_t>(i) * cols + j) * dirs;
        for (int k = 0; k < dirs; ++k) {
          const double* wrow = w.row(k);
          const double* cell = (opts.gauss_seidel ? out.data() : in.data()) + base;
          double scatter = 0.0;
          for (int ks = 0; ks < dirs; ++ks) scatter += wrow[ks] * cell[ks];
          const std::vector<double>& nb_src = opts.gauss_seidel ? out : in;
          const double nb_i = neighbor_sum(nb_src, i, j, k, ds.step_i[k], 0, rows, cols, dirs);
          const double nb_j = neighbor_sum(nb_src, i, j, k, 0, ds.step_j[k], rows, cols, dirs);
          double num = b * scatter + cy[k] * nb_i + cx[k] * nb_j;
          if (i == src_i && j == 0 && k == 0) num += source_term;
          const double value = num / denom[k];
          if (!std::isfinite(value)) {
            throw DivergenceError("stationary sweep produced a non-finite radiance");
          }
          residual = std::max(residual, std::abs(value - in[base + k]));
          out[base + k] = value;
        }
      }
    }
    if (!opts.gauss_seidel) std::swap(cur, next);

    if (residual > prev_residual) {
      if (++growth_streak >= 10) {
        throw DivergenceError("stationary iteration residual grew over 10 consecutive sweeps");
      }
    } else {
      growth_streak = 0;
    }
    prev_residual = residual;
    if (opts.tolerance && residual < *opts.tolerance) {
      ++sweep;
      break;
    }
  }
  cur.index = sweep;
  return cur;
}

void write_csv(const RadianceField& field, std::ostream& out) {
  out << "i,j,k,value\n";
  char buf[80];
  for (int i = 0; i < field.rows(); ++i) {
    for (int j = 0; j < field.cols(); ++j) {
      for (int k = 0; k < field.dirs(); ++k) {
        std::snprintf(buf, sizeof buf, "%d,%d,%d,%.17g\n", i + 1, j + 1, k + 1, field(i, j, k));
        out << buf;
      }
    }
  }
}

}  // namespace uowc
