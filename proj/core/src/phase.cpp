// SPDX-License-Identifier: Apache-2.0
//
// uowc-rte: a deterministic radiative-transfer channel solver for
// underwater optical wireless links.

#include "uowc/phase.hpp"

#include <cmath>
#include <sstream>

#include "uowc/math_util.hpp"

namespace uowc {

namespace {

double sthg_density(double g, double phi) {
  const double denom = 1.0 + g * g - 2.0 * g * std::cos(phi);
  return (1.0 - g * g) / (kTwoPi * denom);
}

// Planar Fournier-Forand density. The bracket of the leading term vanishes
// to second order where delta crosses 1 (phi ~ 0.58 rad for water), so it is
// evaluated with the t^2 factored out symbolically: with t = 1 - delta,
// u = 1 - delta^nu, B = u - nu*t,
//   bracket = (B - t*u)/s^2 - B = t^2 * [(Bq - uq)*delta_pi/delta - Bq],
// where Bq = B/t^2 comes from the binomial series of (1-t)^nu and uq = u/t.
double ff_density(double mu, double n_p, double phi) {
  const double nu = 0.5 * (3.0 - mu);
  const double delta_pi = 4.0 / (3.0 * (n_p - 1.0) * (n_p - 1.0));
  const double s = std::sin(0.5 * phi);
  const double delta = delta_pi * s * s;
  const double t = 1.0 - delta;

  const double u = -std::expm1(nu * std::log1p(-t));  // 1 - delta^nu
  const double uq = t == 0.0 ? nu : u / t;
  double bq;
  if (std::abs(t) <= 0.5) {
    double term = 0.5 * nu * (nu - 1.0);  // C(nu,2) * (-t)^2 / t^2
    double sum = term;
    for (int k = 3; k <= 80; ++k) {
      term *= (nu - (k - 1)) / k * (-t);
      sum += term;
      if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
    }
    bq = -sum;
  } else {
    bq = (u - nu * t) / (t * t);
  }
  const double delta_nu = 1.0 - u;
  const double lead = ((bq - uq) * (delta_pi / delta) - bq) / (4.0 * kPi * delta_nu);

  const double delta_pi_nu = std::pow(delta_pi, nu);
  const double tail = (1.0 - delta_pi_nu) / (16.0 * kPi * (delta_pi - 1.0) * delta_pi_nu) *
                      (3.0 * std::cos(phi) * std::cos(phi) - 1.0);
  return lead + tail;
}

}  // namespace

PhaseFunction PhaseFunction::sthg(double g) {
  if (!(g >= 0.0 && g <= 1.0)) {
    throw ConfigError("sthg: asymmetry parameter g must lie in [0, 1]");
  }
  return PhaseFunction(Sthg{g});
}

PhaseFunction PhaseFunction::tthg(double alpha, double g1, double g2) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw ConfigError("tthg: weight alpha must lie in [0, 1]");
  }
  if (!(g1 >= -1.0 && g1 <= 1.0) || !(g2 >= -1.0 && g2 <= 1.0)) {
    throw ConfigError("tthg: g1 and g2 must lie in [-1, 1]");
  }
  return PhaseFunction(Tthg{alpha, g1, g2});
}

PhaseFunction PhaseFunction::fournier_forand(double mu, double n_p) {
  if (!(mu >= 3.0 && mu <= 5.0)) {
    throw ConfigError("fournier_forand: slope mu must lie in [3, 5]");
  }
  if (!(n_p > 1.0)) {
    throw ConfigError("fournier_forand: refraction index n_p must exceed 1");
  }
  return PhaseFunction(FournierForand{mu, n_p});
}

double PhaseFunction::density(double phi) const {
  // All three variants depend on the angle through cos(phi) and
  // sin^2(phi/2); folding onto [0, pi] makes the symmetry about the forward
  // axis exact and keeps the trig arguments small.
  phi = fold_angle(phi);
  if (phi > kPi) phi = kTwoPi - phi;
  if (const auto* p = std::get_if<Sthg>(&params_)) {
    return sthg_density(p->g, phi);
  }
  if (const auto* p = std::get_if<Tthg>(&params_)) {
    return p->alpha * sthg_density(p->g1, phi) + (1.0 - p->alpha) * sthg_density(p->g2, phi);
  }
  const auto& ff = std::get<FournierForand>(params_);
  if (phi == 0.0) {
    throw NumericError("fournier_forand density is singular at phi = 0");
  }
  if (phi < kForwardClampRad) phi = kForwardClampRad;
  return ff_density(ff.mu, ff.n_p, phi);
}

std::string PhaseFunction::describe() const {
  std::ostringstream out;
  if (const auto* p = std::get_if<Sthg>(&params_)) {
    out << "sthg(g=" << p->g << ")";
  } else if (const auto* p = std::get_if<Tthg>(&params_)) {
    out << "tthg(alpha=" << p->alpha << ", g1=" << p->g1 << ", g2=" << p->g2 << ")";
  } else {
    const auto& ff = std::get<FournierForand>(params_);
    out << "ff(mu=" << ff.mu << ", n_p=" << ff.n_p << ")";
  }
  return out.str();
}

double normalization_integral(const PhaseFunction& pf, double abs_tol) {
  const double lo = pf.is_fournier_forand() ? kForwardClampRad : 0.0;
  const double hi = pf.is_fournier_forand() ? kTwoPi - kForwardClampRad : kTwoPi;
  double total = integrate_adaptive([&](double x) { return pf.density(x); }, lo, hi, abs_tol);
  if (pf.is_fournier_forand()) {
    // Clamped plateaus at both cut ends.
    total += kForwardClampRad * (pf.density(kForwardClampRad) + pf.density(kTwoPi - kForwardClampRad));
  }
  return total;
}

}  // namespace uowc
