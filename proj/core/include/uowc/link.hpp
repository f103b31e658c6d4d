// SPDX-License-Identifier: Apache-2.0
//
// uowc-rte: a deterministic radiative-transfer channel solver for
// underwater optical wireless links.

#pragma once

#include "uowc/errors.hpp"
#include "uowc/math_util.hpp"

namespace uowc {

/// Direct-detection front end. Defaults are typical PIN photodiode values;
/// the source material does not print its exact set, so these are
/// configuration placeholders rather than reproduced numbers.
struct ReceiverElectronics {
  double responsivity = 0.5;      // R_s, A/W
  double gain = 1.0;              // F, 1 for PIN
  double dark_current = 1e-9;     // I_D, A
  double bandwidth = 100e6;       // B_w, Hz
  double temperature = 290.0;     // T_e, K
  double load_resistance = 50.0;  // R_L, ohm

  void validate() const {
    if (!(responsivity > 0.0) || !(dark_current > 0.0) || !(bandwidth > 0.0) ||
        !(temperature > 0.0) || !(load_resistance > 0.0)) {
      throw ConfigError("electronics: all parameters must be strictly positive");
    }
    if (!(gain >= 1.0)) throw ConfigError("electronics: gain factor must be >= 1");
  }
};

/// Shot + thermal noise SNR of the photocurrent.
double snr(double received_power_w, const ReceiverElectronics& elec);

/// OOK error probability Q(sqrt(SNR)), via the complementary error function.
double ber_ook(double snr_value);

}  // namespace uowc
