// SPDX-License-Identifier: Apache-2.0
//
// uowc-rte: a deterministic radiative-transfer channel solver for
// underwater optical wireless links.

#pragma once

#include <functional>
#include <iosfwd>
#include <optional>

#include "uowc/angles.hpp"
#include "uowc/grid.hpp"
#include "uowc/quadrature.hpp"
#include "uowc/water.hpp"

namespace uowc {

/// The reference implementation scales the injected source by the
/// attenuation coefficient; the governing equation does not. Default is the
/// equation's behavior.
enum class SourceScaling { kNone, kTimesC };

struct TdOptions {
  SourceScaling source_scaling = SourceScaling::kNone;
  bool allow_unstable = false;
};

struct TiOptions {
  int max_sweeps = 320;
  std::optional<double> tolerance;  // max-norm change; absent = fixed sweep count
  bool gauss_seidel = false;        // in-place sweeps instead of a swap buffer
  SourceScaling source_scaling = SourceScaling::kNone;
};

/// One explicit time step of the transport marching.
RadianceField td_step(const RadianceField& field, const GridSpec& grid, const AngularGrid& angles,
                      const WeightMatrix& w, const WaterOpticalProperties& water,
                      const SourceSpec& src, const TdOptions& opts = {});

/// Marches from a zero field through all time steps; holds two slices only.
/// The observer (if set) sees every accepted step including the initial zero
/// slice, so receiver powers can be streamed without storing the history.
RadianceField td_solve(const GridSpec& grid, const AngularGrid& angles, const WeightMatrix& w,
                       const WaterOpticalProperties& water, const SourceSpec& src,
                       const TdOptions& opts = {},
                       const std::function<void(int step, const RadianceField&)>& observer = {});

/// Stationary fixed point by Jacobi sweeps (default) or in-place Gauss-Seidel.
RadianceField ti_solve(const GridSpec& grid, const AngularGrid& angles, const WeightMatrix& w,
                       const WaterOpticalProperties& water, const SourceSpec& src,
                       const TiOptions& opts = {});

/// Snapshot dump, "i,j,k,value" rows (1-based indices).
void write_csv(const RadianceField& field, std::ostream& out);

}  // namespace uowc
