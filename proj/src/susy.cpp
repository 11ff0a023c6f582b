#include "pdmsusy/susy.hpp"

#include <cmath>
#include <limits>

#include "pdmsusy/errors.hpp"

namespace pdmsusy {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

/// (2e+1) m'/(4m) with its first derivative; the second would need m'''.
Jet2d w_tail(const Jet2d& m, double eps) {
  const double c = 2.0 * eps + 1.0;
  return {c * m.d1 / (4.0 * m.value),
          c * (m.d2 * m.value - m.d1 * m.d1) /
              (4.0 * m.value * m.value),
          kNaN};
}

}  // namespace

Jet2d superpotential_w(const PotentialFamily& family, const MassProfile& mass,
                       const OrderingParams& ord, double x) {
  const Jet2d m = mass.mass(x);
  const Jet2d sqm = sqrt(m);
  const Jet2d uj = mass.u_jet(x);
  const Jet2d tail = w_tail(m, ord.epsilon);
  return std::visit(
      [&](const auto& f) -> Jet2d {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, MorsePotential>) {
          return (exp(uj * f.alpha) * f.b + f.a) * sqm + tail;
        } else {
          if (uj.value == 0.0) {
            throw SingularPointError("superpotential singular at u = 0");
          }
          double strength;
          if constexpr (std::is_same_v<F, HarmonicOscillator>) {
            strength = f.omega;
          } else {
            strength = f.q / (f.ell + 1.0);
          }
          Jet2d lead = sqm * strength;
          if constexpr (std::is_same_v<F, HarmonicOscillator>) {
            lead = lead * uj;
          }
          return lead - (sqm * (f.ell + 1.0)) / uj + tail;
        }
      },
      family);
}

Jet2d superpotential_from_construction(const FamilyConstruction& constr,
                                       const MassProfile& mass,
                                       const OrderingParams& ord, double x) {
  const RJet r = constr.r_derivs(mass, x);
  if (r.r1 == 0.0 || r.r == 0.0) {
    throw SingularPointError("construction superpotential singular: r or r' vanishes");
  }
  const Jet2d m = mass.mass(x);
  const double eps = ord.epsilon;
  const double w = constr.lambda1 * r.r1 + constr.lambda2 * r.r1 / r.r +
                   r.r2 / (2.0 * r.r1) + eps * m.d1 / (2.0 * m.value);
  const double w1 =
      constr.lambda1 * r.r2 +
      constr.lambda2 * (r.r2 * r.r - r.r1 * r.r1) / (r.r * r.r) +
      (r.r3 * r.r1 - r.r2 * r.r2) / (2.0 * r.r1 * r.r1) +
      eps * (m.d2 * m.value - m.d1 * m.d1) / (2.0 * m.value * m.value);
  return {w, w1, kNaN};
}

Jet2d constant_mass_phi(const PotentialFamily& family, double x) {
  const Jet2d xj = Jet2d::variable(x);
  return std::visit(
      [&](const auto& f) -> Jet2d {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, MorsePotential>) {
          return exp(xj * f.alpha) * f.b + f.a;
        } else {
          if (x == 0.0) {
            throw SingularPointError("flat-mass superpotential singular at x = 0");
          }
          if constexpr (std::is_same_v<F, HarmonicOscillator>) {
            return xj * f.omega - Jet2d::constant(f.ell + 1.0) / xj;
          } else {
            return Jet2d::constant(f.q / (f.ell + 1.0)) -
                   Jet2d::constant(f.ell + 1.0) / xj;
          }
        }
      },
      family);
}

PartnerPotentials partner_potentials(const PotentialFamily& family,
                                     const MassProfile& mass,
                                     const OrderingParams& ord, double x) {
  const Jet2d m = mass.mass(x);
  const Jet2d w = superpotential_w(family, mass, ord, x);
  const double eps = ord.epsilon;
  const double mr = m.d1 / m.value;
  const double two_m = 2.0 * m.value;
  PartnerPotentials out;
  out.w = w.value;
  out.w_prime = w.d1;
  out.v_minus =
      (w.value * w.value - w.d1 - eps * mr * w.value) / two_m;
  out.v_plus =
      (w.value * w.value + w.d1 - (eps + 1.0) * mr * w.value) / two_m +
      ((2.0 * eps + 1.0) / two_m) *
          (0.75 * mr * mr - 0.5 * m.d2 / m.value);
  out.v_m = mass_correction_vm(mass, ord, x).derivative_form;
  return out;
}

std::pair<double, double> constant_mass_partners(const PotentialFamily& family,
                                                 double x) {
  const Jet2d phi = constant_mass_phi(family, x);
  return {(phi.value * phi.value - phi.d1) / 2.0,
          (phi.value * phi.value + phi.d1) / 2.0};
}

VmPair mass_correction_vm(const MassProfile& mass, const OrderingParams& ord,
                          double x) {
  const Jet2d m = mass.mass(x);
  const double eps = ord.epsilon;
  VmPair out;
  out.derivative_form =
      (eps * (2.0 - eps) + 1.25) * m.d1 * m.d1 /
          (8.0 * m.value * m.value * m.value) -
      (eps + 0.5) * m.d2 / (4.0 * m.value * m.value);
  switch (mass.kind()) {
    case MassKind::RationalDelta: {
      const double d = mass.delta();
      const double x2 = x * x;
      const double den = d + x2;
      out.profile_form = (d - 1.0) * (2.0 * eps + 1.0) *
                         (-d + (2.0 - 2.0 * eps + 2.0 * eps * d) * x2 +
                          3.0 * x2 * x2) /
                         (2.0 * den * den * den * den);
      break;
    }
    case MassKind::Constant:
      out.profile_form = 0.0;
      break;
    case MassKind::Custom:
      throw DomainError(
          "profile-form mass correction requires the rational profile");
  }
  return out;
}

double ordering_term_u(const MassProfile& mass, double eta, double epsilon,
                       double x) {
  const Jet2d m = mass.mass(x);
  const double coeff =
      epsilon + eta + epsilon * eta + eta * eta + 1.0;
  return -(2.0 * coeff * m.d1 * m.d1 -
           (epsilon + 1.0) * m.value * m.d2) /
         (4.0 * m.value * m.value * m.value);
}

Jet2d ground_state_jet(const PotentialFamily& family, const MassProfile& mass,
                       const OrderingParams& ord, double x) {
  const Jet2d m = mass.mass(x);
  const Jet2d uj = mass.u_jet(x);
  if (!std::holds_alternative<MorsePotential>(family) && uj.value <= 0.0) {
    return Jet2d{};  // half-line states vanish at and below the u = 0 wall
  }
  const double eps = ord.epsilon;
  const Jet2d logm = log(m);
  // m^{(e+1)/2} prefactor and the integrated (2e+1)m'/4m tail, kept as
  // separate contributions so the epsilon cancellation is exercised.
  const Jet2d prefactor =
      logm * ((eps + 1.0) / 2.0) - logm * ((2.0 * eps + 1.0) / 4.0);
  const Jet2d core = std::visit(
      [&](const auto& f) -> Jet2d {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, MorsePotential>) {
          return -(uj * f.a + exp(uj * f.alpha) * (f.b / f.alpha));
        } else if constexpr (std::is_same_v<F, HarmonicOscillator>) {
          return log(uj) * (f.ell + 1.0) - (uj * uj) * (f.omega / 2.0);
        } else {
          return log(uj) * (f.ell + 1.0) - uj * (f.q / (f.ell + 1.0));
        }
      },
      family);
  return exp(prefactor + core);
}

double ground_state(const PotentialFamily& family, const MassProfile& mass,
                    const OrderingParams& ord, double x) {
  return ground_state_jet(family, mass, ord, x).value;
}

double closed_form_v_minus_base(const PotentialFamily& family,
                                const MassProfile& mass, double x) {
  const double u = mass.u(x);
  return std::visit(
      [&](const auto& f) -> double {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, HarmonicOscillator>) {
          return f.ell * (f.ell + 1.0) / (2.0 * u * u) +
                 0.5 * f.omega * f.omega * u * u -
                 (f.ell + 1.5) * f.omega;
        } else if constexpr (std::is_same_v<F, CoulombPotential>) {
          const double l1 = f.ell + 1.0;
          return f.ell * (f.ell + 1.0) / (2.0 * u * u) - f.q / u +
                 f.q * f.q / (2.0 * l1 * l1);
        } else {
          const double e = std::exp(f.alpha * u);
          return 0.5 * f.b * (2.0 * f.a - f.alpha) * e +
                 0.5 * f.b * f.b * e * e + 0.5 * f.a * f.a;
        }
      },
      family);
}

double closed_form_v_minus(const PotentialFamily& family,
                           const MassProfile& mass, const OrderingParams& ord,
                           double x) {
  return closed_form_v_minus_base(family, mass, x) +
         mass_correction_vm(mass, ord, x).derivative_form;
}

ResidualStats shape_invariance_residual(const PotentialFamily& family,
                                        const PotentialFamily& next,
                                        const MassProfile& mass,
                                        const OrderingParams& ord,
                                        const std::vector<double>& nodes) {
  ResidualStats stats;
  stats.residuals.reserve(nodes.size());
  double sum = 0.0;
  for (const double x : nodes) {
    const double r = partner_potentials(family, mass, ord, x).v_plus -
                     partner_potentials(next, mass, ord, x).v_minus;
    stats.residuals.push_back(r);
    sum += r;
  }
  const double n = static_cast<double>(stats.residuals.size());
  stats.mean = stats.residuals.empty() ? 0.0 : sum / n;
  double sq = 0.0;
  for (const double r : stats.residuals) {
    sq += (r - stats.mean) * (r - stats.mean);
  }
  stats.stdev = stats.residuals.empty() ? 0.0 : std::sqrt(sq / n);
  return stats;
}

ResidualStats shape_invariance_residual(const PotentialFamily& family,
                                        const MassProfile& mass,
                                        const OrderingParams& ord,
                                        const std::vector<double>& nodes) {
  return shape_invariance_residual(family, successor(family), mass, ord,
                                   nodes);
}

}  // namespace pdmsusy
