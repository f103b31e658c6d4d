// SPDX-License-Identifier: Apache-2.0
//
// uowc-rte: a deterministic radiative-transfer channel solver for
// underwater optical wireless links.

#include "uowc/quadrature.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "uowc/errors.hpp"
#include "uowc/math_util.hpp"

namespace uowc {

NcScheme scheme_from_points(int points) {
  switch (points) {
    case 3: return NcScheme::kThreePoint;
    case 5: return NcScheme::kFivePoint;
    case 7: return NcScheme::kSevenPoint;
    default: break;
  }
  throw ConfigError("quadrature scheme must be 3, 5, or 7 points");
}

int min_sub_points(NcScheme scheme) {
  switch (scheme) {
    case NcScheme::kThreePoint: return 3;
    case NcScheme::kFivePoint: return 5;
    case NcScheme::kSevenPoint: return 7;
  }
  return 7;
}

namespace {

// Panel assembly from cached density values f[0..M-1] on the uniform grid
// with step h. Endpoint panels carry the published down-scalings; interior
// panels tile the interval with unit strips.
std::vector<double> assemble_terms(const std::vector<double>& f, double h, NcScheme scheme) {
  const int m = static_cast<int>(f.size());
  std::vector<double> s(m);
  switch (scheme) {
    case NcScheme::kThreePoint: {
      s[0] = h / 6.0 * (2.0 * f[0] + f[1]);
      for (int l = 1; l + 1 < m; ++l) {
        s[l] = 2.0 * h / 12.0 * (f[l - 1] + 4.0 * f[l] + f[l + 1]);
      }
      s[m - 1] = h / 6.0 * (f[m - 2] + 2.0 * f[m - 1]);
      break;
    }
    case NcScheme::kFivePoint: {
      s[0] = h / 12.0 * (2.0 * f[0] + f[1]);
      s[1] = 2.0 * h / 12.0 * (f[0] + 4.0 * f[1] + f[2]);
      for (int l = 2; l + 2 < m; ++l) {
        s[l] = 4.0 * h / 360.0 *
               (7.0 * f[l - 2] + 32.0 * f[l - 1] + 12.0 * f[l] + 32.0 * f[l + 1] + 7.0 * f[l + 2]);
      }
      s[m - 2] = 2.0 * h / 12.0 * (f[m - 3] + 4.0 * f[m - 2] + f[m - 1]);
      s[m - 1] = h / 12.0 * (f[m - 2] + 2.0 * f[m - 1]);
      break;
    }
    case NcScheme::kSevenPoint: {
      s[0] = h / 18.0 * (f[0] + 2.0 * f[1]);
      s[1] = 2.0 * h / 36.0 * (f[0] + 4.0 * f[1] + f[2]);
      s[2] = 4.0 * h / 180.0 *
             (7.0 * f[0] + 32.0 * f[1] + 12.0 * f[2] + 32.0 * f[3] + 7.0 * f[4]);
      for (int l = 3; l + 3 < m; ++l) {
        s[l] = 6.0 * h / 5040.0 *
               (41.0 * f[l - 3] + 216.0 * f[l - 2] + 27.0 * f[l - 1] + 272.0 * f[l] +
                27.0 * f[l + 1] + 216.0 * f[l + 2] + 41.0 * f[l + 3]);
      }
      s[m - 3] = 4.0 * h / 180.0 *
                 (7.0 * f[m - 5] + 32.0 * f[m - 4] + 12.0 * f[m - 3] + 32.0 * f[m - 2] +
                  7.0 * f[m - 1]);
      s[m - 2] = 2.0 * h / 36.0 * (f[m - 3] + 4.0 * f[m - 2] + f[m - 1]);
      s[m - 1] = h / 18.0 * (f[m - 2] + 2.0 * f[m - 1]);
      break;
    }
  }
  return s;
}

}  // namespace

std::vector<double> panel_terms(const PhaseFunction& pf, double lo, double hi, int M,
                                NcScheme scheme) {
  if (M < min_sub_points(scheme)) {
    std::ostringstream msg;
    msg << "scheme of " << static_cast<int>(scheme) << " points needs at least "
        << min_sub_points(scheme) << " sub-points, got " << M;
    throw ConfigError(msg.str());
  }
  if (!(hi > lo)) throw ConfigError("panel interval must have positive width");

  const double h = (hi - lo) / (M - 1);
  std::vector<double> f(M);
  for (int i = 0; i < M; ++i) f[i] = pf.density(lo + i * h);

  std::vector<double> s = assemble_terms(f, h, scheme);
  for (int l = 0; l < M; ++l) {
    if (!std::isfinite(s[l])) {
      std::ostringstream msg;
      msg << "non-finite panel term " << (l + 1) << " on interval [" << lo << ", " << hi << "]";
      throw NumericError(msg.str());
    }
  }
  return s;
}

std::vector<double> panel_terms(const PhaseFunction& pf, const AngularGrid& grid, int ks, int M,
                                NcScheme scheme) {
  if (ks < 0 || ks + 1 >= grid.count()) {
    throw ConfigError("panel interval index out of range");
  }
  return panel_terms(pf, grid.phi[ks], grid.phi[ks + 1], M, scheme);
}

WeightMatrix weight_matrix(const PhaseFunction& pf, const AngularGrid& grid, int M,
                           NcScheme scheme) {
  const int k = grid.count();
  if (k < 4 || k % 2 != 0) throw ConfigError("weight matrix needs an even direction count >= 4");

  WeightMatrix wm;
  wm.directions = k;
  wm.scheme = scheme;
  wm.sub_points = M;
  wm.row0_raw.assign(k, 0.0);

  // First half directly; upper half is the mirror image of the lower half
  // (the inter-angle interval beyond phi_K is never formed).
  for (int ks = 0; ks < k / 2; ++ks) {
    const std::vector<double> s = panel_terms(pf, grid, ks, M, scheme);
    double sum = 0.0;
    for (double v : s) sum += v;
    wm.row0_raw[ks] = sum;
    wm.row0_raw[k - 1 - ks] = sum;
  }

  double total = 0.0;
  for (double v : wm.row0_raw) total += v;
  if (!(total > 0.0) || !std::isfinite(total)) {
    throw NumericError("weight row sum is not positive and finite");
  }

  wm.w.assign(static_cast<std::size_t>(k) * k, 0.0);
  for (int ks = 0; ks < k; ++ks) wm.w[ks] = wm.row0_raw[ks] / total;
  for (int row = 1; row < k; ++row) {
    for (int ks = 0; ks < k; ++ks) {
      wm.w[static_cast<std::size_t>(row) * k + ks] = wm.w[std::abs(row - ks)];
    }
  }
  return wm;
}

void write_csv(const WeightMatrix& wm, std::ostream& out) {
  out << "k,k_s,w\n";
  char buf[64];
  for (int row = 0; row < wm.directions; ++row) {
    for (int ks = 0; ks < wm.directions; ++ks) {
      std::snprintf(buf, sizeof buf, "%d,%d,%.17g\n", row + 1, ks + 1, wm.at(row, ks));
      out << buf;
    }
  }
}

}  // namespace uowc
