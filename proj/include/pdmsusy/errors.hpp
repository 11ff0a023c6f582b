#pragma once

#include <stdexcept>
#include <string>

namespace pdmsusy {

/// A quantity left its admissible domain (e.g. non-positive mass).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Evaluation requested at a singular point of a superpotential (u = 0, r' = 0).
struct SingularPointError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Adaptive quadrature failed to reach the requested tolerance.
struct IntegrationError : std::runtime_error {
  double achieved_tolerance;
  IntegrationError(const std::string& msg, double achieved)
      : std::runtime_error(msg), achieved_tolerance(achieved) {}
};

/// Invalid argument (bad grid bounds, dimension mismatch, bad parameter sign).
struct ArgumentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// An iterative numerical procedure failed to converge.
struct NumericalError : std::runtime_error {
  double residual;
  NumericalError(const std::string& msg, double achieved_residual)
      : std::runtime_error(msg), residual(achieved_residual) {}
};

/// Requested a bound state beyond the family's bound spectrum.
struct NoBoundStateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed or invalid run configuration.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace pdmsusy
