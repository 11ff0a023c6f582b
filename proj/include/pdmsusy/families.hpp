#pragma once

#include <string>
#include <variant>

#include "pdmsusy/mass.hpp"

namespace pdmsusy {

/// The three shape-invariant potential families. Parameter domains are
/// chosen so the zero-energy ground state is normalizable.
struct HarmonicOscillator {
  double omega;  // > 0
  int ell;       // >= 0
};

struct CoulombPotential {
  double q;  // coupling, > 0
  int ell;   // >= 0
};

struct MorsePotential {
  double a;      // < 0
  double b;      // > 0
  double alpha;  // > 0
};

using PotentialFamily =
    std::variant<HarmonicOscillator, CoulombPotential, MorsePotential>;

/// Throws ArgumentError naming the violated constraint.
void validate_family(const PotentialFamily& family);

std::string family_name(const PotentialFamily& family);

/// Partner-parameter step: ell -> ell+1 for the oscillator and Coulomb
/// families, a -> a+alpha for Morse.
PotentialFamily successor(const PotentialFamily& family);

/// Analytic energy-level difference R between the plus-partner at the
/// base parameters and the minus-partner at the successor parameters.
double shape_invariance_remainder(const PotentialFamily& family);

/// Closed-form level E_n with E_0 = 0. Throws NoBoundStateError for a
/// Morse level with n >= -a/alpha, ArgumentError for n < 0.
double analytic_spectrum(const PotentialFamily& family, int n);

/// Number of bound levels; unbounded families report INT_MAX.
int bound_state_count(const PotentialFamily& family);

/// Kinetic-operator ordering exponents, constrained to
/// eta + epsilon + rho = -1. The default factory applies the symmetric
/// eta = rho restriction; free exponents are only meaningful for the
/// scalar ordering term U(x).
struct OrderingParams {
  double epsilon;
  double eta;
  double rho;

  static OrderingParams morrow_brownstein(double epsilon) {
    const double side = -(1.0 + epsilon) / 2.0;
    return {epsilon, side, side};
  }

  static OrderingParams general(double eta, double epsilon, double rho);
};

/// r(x) and its first three x-derivatives for a family's r-map.
struct RJet {
  double r;
  double r1;
  double r2;
  double r3;
};

/// Data (q0, q1, q2, lambda1, lambda2, r-map) from which the family
/// superpotential is rebuilt generically:
///   W = lambda1 r' + lambda2 r'/r + r''/(2 r') + eps m'/(2m)
/// subject to the mass constraint (q0 + q1/r + q2/r^2) r'^2 = m.
struct FamilyConstruction {
  PotentialFamily family;
  double q0 = 0.0;
  double q1 = 0.0;
  double q2 = 0.0;
  double lambda1 = 0.0;
  double lambda2 = 0.0;

  RJet r_derivs(const MassProfile& mass, double x) const;

  /// |(q0 + q1/r + q2/r^2) r'^2 - m| at x.
  double constraint_residual(const MassProfile& mass, double x) const;
};

FamilyConstruction construction_for(const PotentialFamily& family);

}  // namespace pdmsusy
