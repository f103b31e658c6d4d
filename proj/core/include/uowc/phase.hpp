// SPDX-License-Identifier: Apache-2.0
//
// uowc-rte: a deterministic radiative-transfer channel solver for
// underwater optical wireless links.

#pragma once

#include <string>
#include <variant>

#include "uowc/errors.hpp"

namespace uowc {

/// Evaluation of the Fournier-Forand density is cut off below this scattering
/// angle (and symmetrically below 2pi); the density has a non-integrable
/// forward singularity in the planar geometry.
inline constexpr double kForwardClampRad = 7.5e-4;

struct Sthg {
  double g = 0.93;
};

struct Tthg {
  double alpha = 0.9832;
  double g1 = 0.8838;
  double g2 = -0.9835;
};

struct FournierForand {
  double mu = 3.483;
  double n_p = 1.33;
};

/// Phase scattering function over the planar scattering angle in [0, 2pi).
/// Angles passed to density() are folded periodically.
class PhaseFunction {
 public:
  using Params = std::variant<Sthg, Tthg, FournierForand>;

  static PhaseFunction sthg(double g);
  static PhaseFunction tthg(double alpha, double g1, double g2);
  static PhaseFunction fournier_forand(double mu, double n_p);

  /// Density of the scattering angle, 1/rad.
  double density(double phi) const;

  bool is_fournier_forand() const { return std::holds_alternative<FournierForand>(params_); }
  const Params& params() const { return params_; }
  std::string describe() const;

 private:
  explicit PhaseFunction(Params p) : params_(p) {}
  Params params_;
};

/// Integral of the density over one period, by adaptive quadrature that is
/// independent of the solver's panel scheme. Diagnostic only: the solver
/// consumes row-normalized weights, so this constant never enters it.
double normalization_integral(const PhaseFunction& pf, double abs_tol = 1e-9);

}  // namespace uowc
