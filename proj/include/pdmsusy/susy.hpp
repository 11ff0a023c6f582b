#pragma once

#include <vector>

#include "pdmsusy/families.hpp"
#include "pdmsusy/jet.hpp"
#include "pdmsusy/mass.hpp"

namespace pdmsusy {

/// Pointwise data derived from the superpotential. v_m is the diagnostic
/// closed-form mass correction; the canonical v_minus/v_plus never route
/// through it.
struct PartnerPotentials {
  double v_minus;
  double v_plus;
  double w;
  double w_prime;
  double v_m;
};

/// Both transcriptions of the mass-correction term: one built from
/// m'/m'' (any profile), one from the rational profile's explicit form.
/// Their relative sign is established numerically, not assumed.
struct VmPair {
  double derivative_form;
  double profile_form;
};

struct ResidualStats {
  double mean;
  double stdev;
  std::vector<double> residuals;
};

/// Family superpotential
///   HO:      W = -(l+1) sqrt(m)/u + omega sqrt(m) u + (2e+1) m'/(4m)
///   Coulomb: W = -(l+1) sqrt(m)/u + Q sqrt(m)/(l+1) + (2e+1) m'/(4m)
///   Morse:   W = (a + b e^{alpha u}) sqrt(m)       + (2e+1) m'/(4m)
/// Returned jet carries W in value and W' in d1; d2 is NaN because the
/// third mass derivative is not tracked.
Jet2d superpotential_w(const PotentialFamily& family, const MassProfile& mass,
                       const OrderingParams& ord, double x);

/// Same superpotential rebuilt from the generic construction data,
///   W = lambda1 r' + lambda2 r'/r + r''/(2r') + eps m'/(2m),
/// as an independent evaluation path. d2 is NaN as above.
Jet2d superpotential_from_construction(const FamilyConstruction& constr,
                                       const MassProfile& mass,
                                       const OrderingParams& ord, double x);

/// Flat-mass superpotential Phi (exact jet, all derivative slots valid):
///   HO: omega x - (l+1)/x; Coulomb: Q/(l+1) - (l+1)/x; Morse: a + b e^{alpha x}.
Jet2d constant_mass_phi(const PotentialFamily& family, double x);

/// Canonical partner potentials from W:
///   V- = (W^2 - W' - e (m'/m) W) / 2m
///   V+ = (W^2 + W' - (e+1)(m'/m) W) / 2m
///        + ((2e+1)/2m) ((3/4) m'^2/m^2 - (1/2) m''/m)
/// The trailing term is the scalar gap between the two partner kinetic
/// orderings, so both potentials sit under the same kinetic operator.
PartnerPotentials partner_potentials(const PotentialFamily& family,
                                     const MassProfile& mass,
                                     const OrderingParams& ord, double x);

/// Flat-mass partner pair (V-, V+) = ((Phi^2 -+ Phi')/2) built from
/// constant_mass_phi; reference for the delta = 1 reduction.
std::pair<double, double> constant_mass_partners(const PotentialFamily& family,
                                                 double x);

VmPair mass_correction_vm(const MassProfile& mass, const OrderingParams& ord,
                          double x);

/// Scalar ordering term of the expanded kinetic operator,
///   U = -(1/4m^3) (2(e + eta + e*eta + eta^2 + 1) m'^2 - (e+1) m m'').
/// Accepts free exponents (rho implied by the sum rule).
double ordering_term_u(const MassProfile& mass, double eta, double epsilon,
                       double x);

/// Unnormalized zero-energy ground state of the minus Hamiltonian,
/// evaluated in log space so extreme tails underflow to 0 cleanly.
/// The value is independent of epsilon; the epsilon-dependent mass
/// prefactor and superpotential tail cancel to m^{1/4}.
double ground_state(const PotentialFamily& family, const MassProfile& mass,
                    const OrderingParams& ord, double x);

/// Ground state with exact first/second derivatives.
Jet2d ground_state_jet(const PotentialFamily& family, const MassProfile& mass,
                       const OrderingParams& ord, double x);

/// Closed-form V- transcription (diagnostic cross-check, never an input):
///   HO:      l(l+1)/2u^2 + (1/2) omega^2 u^2 - (l + 3/2) omega
///   Coulomb: l(l+1)/2u^2 - Q/u + Q^2/(2(l+1)^2)
///   Morse:   (b/2)(2a - alpha) e^{alpha u} + (b^2/2) e^{2 alpha u} + a^2/2
/// without the mass-correction term.
double closed_form_v_minus_base(const PotentialFamily& family,
                                const MassProfile& mass, double x);

/// Base closed form plus the derivative-form mass correction.
double closed_form_v_minus(const PotentialFamily& family,
                           const MassProfile& mass, const OrderingParams& ord,
                           double x);

/// Per-node V+(x; a0) - V-(x; a1) with a1 the successor parameters; for a
/// shape-invariant family the residuals are x-independent and the mean is
/// the measured level spacing R(a0).
ResidualStats shape_invariance_residual(const PotentialFamily& family,
                                        const MassProfile& mass,
                                        const OrderingParams& ord,
                                        const std::vector<double>& nodes);

/// Overload with an explicit successor (for deliberate mismatch probes).
ResidualStats shape_invariance_residual(const PotentialFamily& family,
                                        const PotentialFamily& next,
                                        const MassProfile& mass,
                                        const OrderingParams& ord,
                                        const std::vector<double>& nodes);

}  // namespace pdmsusy
