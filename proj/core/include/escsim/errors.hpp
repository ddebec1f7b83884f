#pragma once

#include <stdexcept>
#include <string>

namespace escsim {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rejected input (non-finite values, bad horizons, mismatched grids, ...).
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

/// Analytic oracle requested for a field kind that does not provide one.
class UnsupportedOracleError : public Error {
 public:
  using Error::Error;
};

/// Scenario configuration failed validation; message names key and constraint.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Filter algebra lost positive definiteness or an update became degenerate.
class NumericalFailureError : public Error {
 public:
  using Error::Error;
};

/// Simulation state became non-finite or left the sane workspace.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace escsim
