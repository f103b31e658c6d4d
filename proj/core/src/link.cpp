// SPDX-License-Identifier: Apache-2.0
//
// uowc-rte: a deterministic radiative-transfer channel solver for
// underwater optical wireless links.

#include "uowc/link.hpp"

#include <cmath>

namespace uowc {

double snr(double received_power_w, const ReceiverElectronics& elec) {
  if (!(received_power_w >= 0.0)) throw ConfigError("snr: received power must be >= 0");
  elec.validate();
  const double photo_current = elec.responsivity * elec.gain * received_power_w;
  const double shot = 2.0 * kElementaryCharge * (photo_current + elec.dark_current) * elec.bandwidth;
  const double thermal = 4.0 * kBoltzmann * elec.temperature * elec.bandwidth / elec.load_resistance;
  return photo_current * photo_current / (shot + thermal);
}

double ber_ook(double snr_value) {
  if (!(snr_value >= 0.0)) throw ConfigError("ber_ook: SNR must be >= 0");
  // Q(x) = erfc(x / sqrt(2)) / 2 with x = sqrt(snr).
  return 0.5 * std::erfc(std::sqrt(0.5 * snr_value));
}

}  // namespace uowc
