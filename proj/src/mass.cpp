#include "pdmsusy/mass.hpp"

#include <cmath>

#include "pdmsusy/errors.hpp"
#include "pdmsusy/quadrature.hpp"

namespace pdmsusy {

MassProfile MassProfile::rational_delta(double delta) {
  if (!(delta > 0.0)) {
    throw ArgumentError("rational mass profile requires delta > 0");
  }
  MassProfile p;
  p.kind_ = MassKind::RationalDelta;
  p.delta_ = delta;
  return p;
}

MassProfile MassProfile::constant(double m0) {
  if (!(m0 > 0.0)) {
    throw ArgumentError("constant mass profile requires m0 > 0");
  }
  MassProfile p;
  p.kind_ = MassKind::Constant;
  p.m0_ = m0;
  return p;
}

MassProfile MassProfile::custom(std::function<Jet2d(double)> mass_fn,
                                std::function<double(double)> u_fn) {
  if (!mass_fn) {
    throw ArgumentError("custom mass profile requires a mass function");
  }
  MassProfile p;
  p.kind_ = MassKind::Custom;
  p.mass_fn_ = std::move(mass_fn);
  p.u_fn_ = std::move(u_fn);
  return p;
}

Jet2d MassProfile::mass(double x) const {
  Jet2d m;
  switch (kind_) {
    case MassKind::RationalDelta: {
      const Jet2d xj = Jet2d::variable(x);
      const Jet2d s = xj * xj;
      const Jet2d base = (s + delta_) / (s + 1.0);
      m = base * base;
      break;
    }
    case MassKind::Constant:
      m = Jet2d::constant(m0_);
      break;
    case MassKind::Custom:
      m = mass_fn_(x);
      break;
  }
  if (!(m.value > 0.0)) {
    throw DomainError("mass profile is non-positive at the requested point");
  }
  return m;
}

double MassProfile::u(double x) const {
  switch (kind_) {
    case MassKind::RationalDelta:
      return x + (delta_ - 1.0) * std::atan(x);
    case MassKind::Constant:
      return std::sqrt(m0_) * x;
    case MassKind::Custom:
      return u_fn_ ? u_fn_(x) : u_quadrature(x);
  }
  return x;
}

Jet2d MassProfile::u_jet(double x) const {
  const Jet2d m = mass(x);
  const double sq = std::sqrt(m.value);
  return {u(x), sq, m.d1 / (2.0 * sq)};
}

double MassProfile::u_quadrature(double x) const {
  return integrate([this](double t) { return std::sqrt(mass(t).value); }, 0.0,
                   x);
}

double MassProfile::delta() const {
  if (kind_ != MassKind::RationalDelta) {
    throw ArgumentError("delta is defined only for the rational profile");
  }
  return delta_;
}

}  // namespace pdmsusy
