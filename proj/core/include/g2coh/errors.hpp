#pragma once

#include <stdexcept>
#include <string>

namespace g2coh {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inputs outside the mathematical domain of an operation (non-finite
/// frequencies, |J| > 1, non-positive widths, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A numerical procedure failed to reach its tolerance. The message carries
/// the diagnostics (last estimates, error bounds).
class NumericError : public Error {
 public:
  using Error::Error;
};

/// The requested evaluation route does not exist for the given inputs, e.g.
/// a closed form for a mixed Gaussian/Lorentzian pair.
class UnsupportedMethodError : public Error {
 public:
  using Error::Error;
};

/// Unparseable or inconsistent run configuration (maps to the usage exit code).
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace g2coh
