#pragma once

#include <functional>

#include "pdmsusy/jet.hpp"

namespace pdmsusy {

enum class MassKind { RationalDelta, Constant, Custom };

/// Position-dependent mass profile m(x) together with the deformed
/// coordinate u(x) = integral of sqrt(m) from 0 to x.
///
/// The rational profile m = ((delta + x^2)/(1 + x^2))^2 admits the closed
/// form u = x + (delta - 1) atan(x); the constant profile gives
/// u = sqrt(m0) x. Custom profiles fall back to adaptive quadrature for u
/// unless a closed form is supplied.
class MassProfile {
 public:
  static MassProfile rational_delta(double delta);
  static MassProfile constant(double m0 = 1.0);
  static MassProfile custom(std::function<Jet2d(double)> mass_fn,
                            std::function<double(double)> u_fn = {});

  /// m and its first two derivatives at x. Throws DomainError if the
  /// profile is non-positive there.
  Jet2d mass(double x) const;

  /// Deformed coordinate u(x), anchored at u(0) = 0.
  double u(double x) const;

  /// u together with u' = sqrt(m) and u'' = m'/(2 sqrt(m)).
  Jet2d u_jet(double x) const;

  /// u(x) by adaptive quadrature of sqrt(m), independent of the closed
  /// form; intended for cross-checks.
  double u_quadrature(double x) const;

  MassKind kind() const { return kind_; }

  /// Profile parameter for the rational kind; throws otherwise.
  double delta() const;

 private:
  MassProfile() = default;

  MassKind kind_ = MassKind::Constant;
  double delta_ = 1.0;
  double m0_ = 1.0;
  std::function<Jet2d(double)> mass_fn_;
  std::function<double(double)> u_fn_;
};

}  // namespace pdmsusy
