#include "pdmsusy/families.hpp"

#include <climits>
#include <cmath>

#include "pdmsusy/errors.hpp"

namespace pdmsusy {

void validate_family(const PotentialFamily& family) {
  std::visit(
      [](const auto& f) {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, HarmonicOscillator>) {
          if (!(f.omega > 0.0)) throw ArgumentError("omega must be positive");
          if (f.ell < 0) throw ArgumentError("ell must be nonnegative");
        } else if constexpr (std::is_same_v<F, CoulombPotential>) {
          if (!(f.q > 0.0)) throw ArgumentError("q must be positive");
          if (f.ell < 0) throw ArgumentError("ell must be nonnegative");
        } else {
          if (!(f.a < 0.0)) throw ArgumentError("a must be negative");
          if (!(f.b > 0.0)) throw ArgumentError("b must be positive");
          if (!(f.alpha > 0.0)) throw ArgumentError("alpha must be positive");
        }
      },
      family);
}

std::string family_name(const PotentialFamily& family) {
  return std::visit(
      [](const auto& f) -> std::string {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, HarmonicOscillator>) return "ho";
        if constexpr (std::is_same_v<F, CoulombPotential>) return "coulomb";
        return "morse";
      },
      family);
}

PotentialFamily successor(const PotentialFamily& family) {
  return std::visit(
      [](auto f) -> PotentialFamily {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, MorsePotential>) {
          f.a += f.alpha;
        } else {
          f.ell += 1;
        }
        return f;
      },
      family);
}

double shape_invariance_remainder(const PotentialFamily& family) {
  return std::visit(
      [](const auto& f) -> double {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, HarmonicOscillator>) {
          return 2.0 * f.omega;
        } else if constexpr (std::is_same_v<F, CoulombPotential>) {
          const double l1 = f.ell + 1.0;
          const double l2 = f.ell + 2.0;
          return 0.5 * f.q * f.q * (1.0 / (l1 * l1) - 1.0 / (l2 * l2));
        } else {
          const double a1 = f.a + f.alpha;
          return 0.5 * (f.a * f.a - a1 * a1);
        }
      },
      family);
}

double analytic_spectrum(const PotentialFamily& family, int n) {
  if (n < 0) throw ArgumentError("level index must be nonnegative");
  return std::visit(
      [n](const auto& f) -> double {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, HarmonicOscillator>) {
          return 2.0 * n * f.omega;
        } else if constexpr (std::is_same_v<F, CoulombPotential>) {
          const double lo = f.ell + 1.0;
          const double hi = f.ell + n + 1.0;
          return 0.5 * f.q * f.q * (1.0 / (lo * lo) - 1.0 / (hi * hi));
        } else {
          if (!(n < -f.a / f.alpha)) {
            throw NoBoundStateError("no bound level " + std::to_string(n) +
                                    ": requires n < -a/alpha");
          }
          const double an = f.a + n * f.alpha;
          return 0.5 * (f.a * f.a - an * an);
        }
      },
      family);
}

int bound_state_count(const PotentialFamily& family) {
  if (const auto* m = std::get_if<MorsePotential>(&family)) {
    return static_cast<int>(std::ceil(-m->a / m->alpha));
  }
  return INT_MAX;
}

OrderingParams OrderingParams::general(double eta, double epsilon,
                                       double rho) {
  if (std::abs(eta + epsilon + rho + 1.0) > 1e-12) {
    throw ArgumentError("ordering exponents must satisfy eta+epsilon+rho=-1");
  }
  return {epsilon, eta, rho};
}

RJet FamilyConstruction::r_derivs(const MassProfile& mass, double x) const {
  const Jet2d m = mass.mass(x);
  const double u = mass.u(x);
  const double sq = std::sqrt(m.value);
  const double u1 = sq;
  const double u2 = m.d1 / (2.0 * sq);
  const double u3 = m.d2 / (2.0 * sq) - m.d1 * m.d1 / (4.0 * m.value * sq);
  return std::visit(
      [&](const auto& f) -> RJet {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, HarmonicOscillator>) {
          return {u * u / 4.0, u * u1 / 2.0, (u1 * u1 + u * u2) / 2.0,
                  (3.0 * u1 * u2 + u * u3) / 2.0};
        } else if constexpr (std::is_same_v<F, CoulombPotential>) {
          return {u, u1, u2, u3};
        } else {
          const double al = f.alpha;
          const double r = std::exp(al * u);
          return {r, al * u1 * r, r * (al * al * u1 * u1 + al * u2),
                  r * (al * al * al * u1 * u1 * u1 +
                       3.0 * al * al * u1 * u2 + al * u3)};
        }
      },
      family);
}

double FamilyConstruction::constraint_residual(const MassProfile& mass,
                                               double x) const {
  const RJet r = r_derivs(mass, x);
  const double lhs =
      (q0 + q1 / r.r + q2 / (r.r * r.r)) * r.r1 * r.r1;
  return std::abs(lhs - mass.mass(x).value);
}

FamilyConstruction construction_for(const PotentialFamily& family) {
  FamilyConstruction c;
  c.family = family;
  std::visit(
      [&c](const auto& f) {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, HarmonicOscillator>) {
          c.q1 = 1.0;
          c.lambda1 = 2.0 * f.omega;
          c.lambda2 = -0.5 * f.ell - 0.75;
        } else if constexpr (std::is_same_v<F, CoulombPotential>) {
          c.q0 = 1.0;
          c.lambda1 = f.q / (f.ell + 1.0);
          c.lambda2 = -(f.ell + 1.0);
        } else {
          c.q2 = 1.0 / (f.alpha * f.alpha);
          c.lambda1 = f.b / f.alpha;
          c.lambda2 = f.a / f.alpha - 0.5;
        }
      },
      family);
  return c;
}

}  // namespace pdmsusy
