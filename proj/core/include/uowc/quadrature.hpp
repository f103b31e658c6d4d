// SPDX-License-Identifier: Apache-2.0
//
// uowc-rte: a deterministic radiative-transfer channel solver for
// underwater optical wireless links.

#pragma once

#include <iosfwd>
#include <vector>

#include "uowc/angles.hpp"
#include "uowc/phase.hpp"

namespace uowc {

/// Composite Newton-Cotes panel family used for the scattering integral.
enum class NcScheme : int {
  kThreePoint = 3,
  kFivePoint = 5,
  kSevenPoint = 7,
};

NcScheme scheme_from_points(int points);
int min_sub_points(NcScheme scheme);

/// K x K weights replacing the scattering integral. Row 0 is normalized to
/// sum exactly 1; the other rows follow the |k - k_s| Toeplitz rule and their
/// sums are generally close to but not exactly 1.
struct WeightMatrix {
  int directions = 0;            // K
  NcScheme scheme = NcScheme::kSevenPoint;
  int sub_points = 0;            // M grid points per inter-angle interval
  std::vector<double> w;         // row-major K*K, normalized
  std::vector<double> row0_raw;  // pre-normalization first row, diagnostics

  double at(int k, int ks) const { return w[static_cast<std::size_t>(k) * directions + ks]; }
  const double* row(int k) const { return w.data() + static_cast<std::size_t>(k) * directions; }
};

/// The M panel terms S(1..M) over one interval [lo, hi], evaluated on the
/// M-point grid with step h = (hi - lo)/(M - 1). Density values at the grid
/// points are computed once and shared by overlapping panels.
std::vector<double> panel_terms(const PhaseFunction& pf, double lo, double hi, int M,
                                NcScheme scheme);

/// Same, over the interval [phi_ks, phi_ks+1] of a grid (0-based ks < K-1).
std::vector<double> panel_terms(const PhaseFunction& pf, const AngularGrid& grid, int ks, int M,
                                NcScheme scheme);

/// Assembles the weight matrix: direct panel sums on the first K/2 intervals,
/// mirrored onto the upper half, row-normalized, Toeplitz-filled.
WeightMatrix weight_matrix(const PhaseFunction& pf, const AngularGrid& grid, int M,
                           NcScheme scheme);

/// Debug dump, row-major with header "k,k_s,w" (1-based indices).
void write_csv(const WeightMatrix& wm, std::ostream& out);

}  // namespace uowc
