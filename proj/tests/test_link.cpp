// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <vector>

#include "uowc/link.hpp"

using namespace uowc;

TEST_SUITE_BEGIN("link");

TEST_CASE("snr is zero at zero power and scales by regime") {
  const ReceiverElectronics elec;
  CHECK(snr(0.0, elec) == 0.0);

  // Thermal-dominated: photocurrent far below the thermal floor -> SNR ~ P^2.
  {
    const double p = 1e-9;
    const double ratio = snr(2.0 * p, elec) / snr(p, elec);
    CHECK(ratio == doctest::Approx(4.0).epsilon(0.01));
  }
  // Shot-dominated: huge photocurrent -> SNR ~ P.
  {
    const double p = 1e3;
    const double ratio = snr(2.0 * p, elec) / snr(p, elec);
    CHECK(ratio == doctest::Approx(2.0).epsilon(0.01));
  }
}

TEST_CASE("snr is strictly increasing in power") {
  const ReceiverElectronics elec;
  double prev = -1.0;
  for (double p = 1e-12; p < 1.0; p *= 10.0) {
    const double s = snr(p, elec);
    CHECK(s > prev);
    prev = s;
  }
}

TEST_CASE("ook error probability endpoints") {
  CHECK(ber_ook(0.0) == doctest::Approx(0.5).epsilon(1e-15));
  // Q(3) from the standard normal tail.
  CHECK(ber_ook(9.0) == doctest::Approx(1.3498980316300946e-3).epsilon(1e-10));
  CHECK(std::abs(ber_ook(9.0) - 1.3499e-3) < 1e-6);
  CHECK(ber_ook(1e6) < 1e-300);
}

TEST_CASE("ber is strictly decreasing in snr") {
  double prev = 1.0;
  for (double s = 0.0; s <= 40.0; s += 0.5) {
    const double b = ber_ook(s);
    CHECK(b < prev);
    prev = b;
  }
}

TEST_CASE("monotone decaying power composes to non-decreasing ber") {
  const ReceiverElectronics elec;
  std::vector<double> power = {1e-3, 5e-4, 1e-4, 3e-5, 1e-5, 1e-6, 1e-7};
  double prev = 0.0;
  for (double p : power) {
    const double b = ber_ook(snr(p, elec));
    CHECK(b >= prev);
    prev = b;
  }
}

TEST_CASE("electronics validation") {
  ReceiverElectronics bad;
  bad.gain = 0.5;
  CHECK_THROWS_AS(snr(1.0, bad), ConfigError);
  bad = ReceiverElectronics{};
  bad.bandwidth = 0.0;
  CHECK_THROWS_AS(snr(1.0, bad), ConfigError);
}

TEST_SUITE_END();
