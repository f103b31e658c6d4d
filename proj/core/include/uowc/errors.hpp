// SPDX-License-Identifier: Apache-2.0
//
// uowc-rte: a deterministic radiative-transfer channel solver for
// underwater optical wireless links.

#pragma once

#include <stdexcept>
#include <string>

namespace uowc {

/// Scenario/configuration problem: bad field values, unknown presets,
/// geometry that does not fit the grid. CLI exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numerical failure inside a solver or quadrature. CLI exit code 3.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Explicit time marching produced a negative or non-finite radiance.
class InstabilityError : public NumericError {
 public:
  InstabilityError(const std::string& what, double cfl) : NumericError(what), cfl_(cfl) {}
  double cfl_number() const { return cfl_; }

 private:
  double cfl_;
};

/// Fixed-point iteration residual kept growing.
class DivergenceError : public NumericError {
 public:
  using NumericError::NumericError;
};

/// Monte Carlo statistical failure (no captures at a requested distance,
/// unusable variance). CLI exit code 4.
class McError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace uowc
