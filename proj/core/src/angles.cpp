// SPDX-License-Identifier: Apache-2.0
//
// uowc-rte: a deterministic radiative-transfer channel solver for
// underwater optical wireless links.

#include "uowc/angles.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "uowc/errors.hpp"
#include "uowc/math_util.hpp"

namespace uowc {

namespace {

// Thresholds for a sorted angle set: d_0 = 0, interior midpoints, and the
// wrapped last threshold (phi_K + 2pi)/2.
std::vector<double> make_thresholds(const std::vector<double>& phi) {
  const int k = static_cast<int>(phi.size());
  std::vector<double> d(k + 1);
  d[0] = 0.0;
  for (int i = 1; i < k; ++i) d[i] = 0.5 * (phi[i - 1] + phi[i]);
  d[k] = 0.5 * (phi[k - 1] + kTwoPi);
  return d;
}

}  // namespace

double AngularGrid::gap_after(int k) const {
  const int n = count();
  if (k + 1 < n) return phi[k + 1] - phi[k];
  return (phi[0] + kTwoPi) - phi[n - 1];
}

AngularGrid AngularGrid::from_angles(std::vector<double> angles) {
  if (angles.size() < 2) throw ConfigError("angular grid needs at least two directions");
  if (!std::is_sorted(angles.begin(), angles.end())) {
    throw ConfigError("angular grid angles must be sorted increasing");
  }
  if (angles.front() < 0.0 || angles.back() >= kTwoPi) {
    throw ConfigError("angular grid angles must lie in [0, 2pi)");
  }
  AngularGrid g;
  g.phi = std::move(angles);
  g.thresholds = make_thresholds(g.phi);
  g.xi.resize(g.phi.size());
  g.eta.resize(g.phi.size());
  for (std::size_t i = 0; i < g.phi.size(); ++i) {
    g.xi[i] = std::cos(g.phi[i]);
    g.eta[i] = std::sin(g.phi[i]);
  }
  g.converged = true;
  return g;
}

namespace {

// The planar Fournier-Forand density throws at exactly 0; the quantizer's
// first cell starts at d_0 = 0, so its integrand takes the clamped value
// there (the density is already constant on (0, clamp]).
auto cell_density(const PhaseFunction& pf) {
  const bool ff = pf.is_fournier_forand();
  return [&pf, ff](double x) {
    return (ff && x == 0.0) ? pf.density(kForwardClampRad) : pf.density(x);
  };
}

}  // namespace

std::vector<double> lloyd_step(const PhaseFunction& pf, const std::vector<double>& phi,
                               double integral_tol) {
  const int k = static_cast<int>(phi.size());
  const std::vector<double> d = make_thresholds(phi);
  const auto dens = cell_density(pf);
  std::vector<double> next(k);
  for (int i = 0; i < k; ++i) {
    const double lo = d[i];
    const double hi = d[i + 1];
    const double mass = integrate_adaptive(dens, lo, hi, integral_tol);
    if (!(mass > 0.0)) {
      std::ostringstream msg;
      msg << "degenerate quantizer cell " << (i + 1) << ": density mass over [" << lo << ", "
          << hi << "] is zero";
      throw NumericError(msg.str());
    }
    const double first_moment =
        integrate_adaptive([&](double x) { return x * dens(x); }, lo, hi, integral_tol);
    next[i] = first_moment / mass;
  }
  return next;
}

double lloyd_mse(const PhaseFunction& pf, const std::vector<double>& phi, double integral_tol) {
  const std::vector<double> d = make_thresholds(phi);
  const auto dens = cell_density(pf);
  double total = 0.0;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    const double c = phi[i];
    total += integrate_adaptive(
        [&](double x) {
          const double diff = c - x;
          return diff * diff * dens(x);
        },
        d[i], d[i + 1], integral_tol);
  }
  return total;
}

AngularGrid optimal_scattering_angles(const PhaseFunction& pf, int K, const LloydOptions& opts) {
  if (K < 4 || K % 2 != 0) {
    throw ConfigError("direction count K must be even and at least 4");
  }
  if (!(opts.epsilon > 0.0)) throw ConfigError("lloyd epsilon must be positive");

  std::vector<double> phi(K);
  for (int i = 0; i < K; ++i) phi[i] = i * kTwoPi / K;

  AngularGrid grid;
  bool converged = false;
  int iters = 0;
  while (iters < opts.max_iterations) {
    std::vector<double> next = lloyd_step(pf, phi, opts.integral_tol);
    double move = 0.0;
    for (int i = 0; i < K; ++i) move = std::max(move, std::abs(next[i] - phi[i]));
    phi = std::move(next);
    ++iters;
    if (opts.record_mse) grid.mse_history.push_back(lloyd_mse(pf, phi, opts.integral_tol));
    if (move < opts.epsilon) {
      converged = true;
      break;
    }
  }

  for (int i = 0; i + 1 < K; ++i) {
    if (!(phi[i] < phi[i + 1])) {
      throw NumericError("quantizer angles lost strict ordering");
    }
  }

  grid.phi = std::move(phi);
  grid.thresholds = make_thresholds(grid.phi);
  grid.xi.resize(K);
  grid.eta.resize(K);
  for (int i = 0; i < K; ++i) {
    grid.xi[i] = std::cos(grid.phi[i]);
    grid.eta[i] = std::sin(grid.phi[i]);
  }
  grid.converged = converged;
  grid.iterations = iters;
  grid.mse = lloyd_mse(pf, grid.phi, opts.integral_tol);
  return grid;
}

FovDirections discretize_fov(const AngularGrid& grid, double fov_half_angle) {
  if (!(fov_half_angle > 0.0) || fov_half_angle > kPi) {
    throw ConfigError("fov half-angle must lie in (0, pi]");
  }
  FovDirections out;
  for (int k = 0; k < grid.count(); ++k) {
    if (grid.phi[k] <= fov_half_angle) {
      out.index.push_back(k);
      out.phi.push_back(grid.phi[k]);
      out.gap.push_back(grid.gap_after(k));
    }
  }
  if (out.index.empty()) {
    throw ConfigError("field of view is narrower than the first angular cell: no directions selected");
  }
  return out;
}

}  // namespace uowc
