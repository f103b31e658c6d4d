// SPDX-License-Identifier: Apache-2.0
//
// uowc-rte: a deterministic radiative-transfer channel solver for
// underwater optical wireless links.

#pragma once

#include "uowc/errors.hpp"

namespace uowc {

/// Inherent optical properties of the medium. c = a + b always holds;
/// albedo = b/c is the single-interaction survival probability.
struct WaterOpticalProperties {
  double absorption = 0.0;   // a, 1/m
  double scattering = 0.0;   // b, 1/m
  double attenuation = 0.0;  // c = a + b, 1/m
  double wavelength_nm = 532.0;  // informational only

  double albedo() const { return attenuation > 0.0 ? scattering / attenuation : 0.0; }

  static WaterOpticalProperties from_absorption_scattering(double a, double b,
                                                           double wavelength_nm = 532.0) {
    if (!(a >= 0.0) || !(b >= 0.0)) {
      throw ConfigError("water: absorption and scattering must be non-negative");
    }
    WaterOpticalProperties w;
    w.absorption = a;
    w.scattering = b;
    w.attenuation = a + b;
    w.wavelength_nm = wavelength_nm;
    return w;
  }

  static WaterOpticalProperties from_scattering_attenuation(double b, double c,
                                                            double wavelength_nm = 532.0) {
    if (!(b >= 0.0) || !(c > 0.0) || b > c) {
      throw ConfigError("water: need 0 <= b <= c and c > 0");
    }
    return from_absorption_scattering(c - b, b, wavelength_nm);
  }
};

}  // namespace uowc
