#include "pdmsusy/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <random>
#include <utility>
#include <variant>

#include "pdmsusy/eigensolver.hpp"
#include "pdmsusy/errors.hpp"
#include "pdmsusy/susy.hpp"

namespace pdmsusy {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> xs(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    xs[static_cast<std::size_t>(i)] =
        lo + (hi - lo) * static_cast<double>(i) / (count - 1.0);
  }
  return xs;
}

/// Sample points where every family member is regular: off the u = 0
/// wall for the half-line families, straddling the well for Morse.
std::vector<double> probe_nodes(const PotentialFamily& family, int count) {
  if (std::holds_alternative<MorsePotential>(family)) {
    return linspace(-4.0, 2.5, count);
  }
  return linspace(0.25, 6.0, count);
}

double mean_of(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) /
         static_cast<double>(v.size());
}

double stdev_of(const std::vector<double>& v) {
  const double mean = mean_of(v);
  double ss = 0.0;
  for (const double x : v) ss += (x - mean) * (x - mean);
  return std::sqrt(ss / static_cast<double>(v.size()));
}

std::vector<std::string> default_checks(const RunConfig& cfg) {
  std::vector<std::string> names = {
      "constraint_identity",     "delta1_reduction",
      "factorized_vs_direct",    "isospectral_sweep_delta",
      "isospectral_sweep_epsilon", "ladder_mapping",
      "partner_degeneracy",      "shape_invariance",
      "spectrum_vs_analytic",    "vm_sign_diagnostic",
      "zero_mode"};
  if (std::holds_alternative<CoulombPotential>(cfg.family)) {
    names.push_back("coulomb_index");
  }
  return names;
}

}  // namespace

CheckResult check_partner_degeneracy(const DiscreteSystem& sys, double tol,
                                     int pairs) {
  const VectorX<double> minus = lowest_eigenvalues(sys.h_minus, pairs + 1);
  const VectorX<double> plus = lowest_eigenvalues(sys.h_plus, pairs);
  double worst = 0.0;
  int at = 0;
  for (int i = 0; i < pairs; ++i) {
    const double denom =
        std::max({std::abs(plus[i]), std::abs(minus[i + 1]),
                  std::numeric_limits<double>::min()});
    const double rel = std::abs(plus[i] - minus[i + 1]) / denom;
    if (rel > worst) {
      worst = rel;
      at = i;
    }
  }
  return {"partner_degeneracy", worst <= tol, worst, tol,
          "max relative mismatch over " + std::to_string(pairs) +
              " partner pairs, worst at pair " + std::to_string(at)};
}

CheckResult check_spectrum_vs_analytic(const DiscreteSystem& sys,
                                       const PotentialFamily& family, int k,
                                       double tol) {
  const VectorX<double> vals = lowest_eigenvalues(sys.h_minus, k);
  double worst = 0.0;
  int at = 0;
  for (int n = 0; n < k; ++n) {
    const double err = std::abs(vals[n] - analytic_spectrum(family, n));
    if (err > worst) {
      worst = err;
      at = n;
    }
  }
  return {"spectrum_vs_analytic", worst <= tol, worst, tol,
          std::to_string(k) + " levels against the closed form, worst at level " +
              std::to_string(at)};
}

CheckResult spread_check(const std::string& name,
                         const std::vector<std::vector<double>>& energies,
                         const std::vector<std::string>& labels, double tol) {
  if (energies.empty() || energies.front().empty()) {
    throw ArgumentError("spread check needs at least one energy set");
  }
  const std::size_t k = energies.front().size();
  for (const auto& e : energies) {
    if (e.size() != k) {
      throw ArgumentError("spread check needs equal level counts");
    }
  }
  double worst = 0.0;
  std::size_t at = 0;
  for (std::size_t lvl = 0; lvl < k; ++lvl) {
    double lo = energies.front()[lvl];
    double hi = lo;
    for (const auto& e : energies) {
      lo = std::min(lo, e[lvl]);
      hi = std::max(hi, e[lvl]);
    }
    if (hi - lo > worst) {
      worst = hi - lo;
      at = lvl;
    }
  }
  std::string det = "swept ";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    det += (i == 0 ? "" : ", ") + labels[i];
  }
  det += "; worst spread at level " + std::to_string(at);
  return {name, worst <= tol, worst, tol, det};
}

CheckResult check_isospectral_sweep_delta(const RunConfig& cfg) {
  const OrderingParams ord = ordering_for(cfg);
  const int k =
      std::max(1, std::min({cfg.levels, 4, bound_state_count(cfg.family)}));
  std::vector<std::vector<double>> energies;
  std::vector<std::string> labels;
  for (const double delta : cfg.sweep) {
    const MassProfile mass = MassProfile::rational_delta(delta);
    const DiscreteSystem sys =
        build_system(cfg.family, mass, ord, resolve_grid(cfg, delta));
    const VectorX<double> vals = lowest_eigenvalues(sys.h_minus, k);
    energies.emplace_back(vals.data(), vals.data() + vals.size());
    labels.push_back("delta=" + fmt(delta));
  }
  return spread_check("isospectral_sweep_delta", energies, labels,
                      cfg.tolerances.sweep);
}

CheckResult check_isospectral_sweep_epsilon(const RunConfig& cfg) {
  const MassProfile mass = mass_for(cfg);
  const DiscretizationGrid grid = resolve_grid(cfg);
  const int k =
      std::max(1, std::min({cfg.levels, 4, bound_state_count(cfg.family)}));
  std::vector<std::vector<double>> energies;
  std::vector<std::string> labels;
  for (const double eps : {-1.0, -0.5, 0.0}) {
    const OrderingParams ord = OrderingParams::morrow_brownstein(eps);
    const DiscreteSystem sys = build_system(cfg.family, mass, ord, grid);
    const VectorX<double> vals = lowest_eigenvalues(sys.h_minus, k);
    energies.emplace_back(vals.data(), vals.data() + vals.size());
    labels.push_back("epsilon=" + fmt(eps));
  }
  return spread_check("isospectral_sweep_epsilon", energies, labels,
                      cfg.tolerances.sweep);
}

CheckResult check_ladder_mapping(const DiscreteSystem& base,
                                 const DiscreteSystem& next, int level,
                                 double tol) {
  if (level < 1) throw ArgumentError("ladder level must be at least 1");
  if (base.grid.n != next.grid.n) {
    throw ArgumentError("ladder mapping needs matching grids");
  }
  const auto src = lowest_eigenpairs(next.h_minus, level, next.grid.h);
  const auto dst = lowest_eigenpairs(base.h_minus, level + 1, base.grid.h);
  const VectorX<double> psi = src.eigenvectors.col(level - 1);
  const Eigen::Index n = psi.size();
  VectorX<double> mid(n - 1);
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    mid[i] = 0.5 * (psi[i] + psi[i + 1]);
  }
  const VectorX<double> raised = apply_transpose(base.a_minus, mid);
  const VectorX<double> target = dst.eigenvectors.col(level);
  const double denom = raised.norm() * target.norm();
  const double cosine = denom > 0.0 ? std::abs(raised.dot(target)) / denom : 0.0;
  const double measured = 1.0 - cosine;
  return {"ladder_mapping", measured <= tol, measured, tol,
          "misalignment of the raised successor state against level " +
              std::to_string(level)};
}

CheckResult check_zero_mode(const DiscreteSystem& sys,
                            const VectorX<double>& psi0) {
  if (psi0.size() != sys.grid.n) {
    throw ArgumentError("zero-mode state must live on the grid nodes");
  }
  const Eigen::Index trim = 5;
  const VectorX<double> applied = apply(sys.a_minus, psi0);
  if (applied.size() <= 2 * trim) {
    throw ArgumentError("zero-mode check needs more than 10 interior nodes");
  }
  const double e0 = lowest_eigenvalues(sys.h_minus, 1)[0];
  const double rnorm = applied.segment(trim, applied.size() - 2 * trim).norm();
  const double pnorm = psi0.norm();
  const double ratio =
      pnorm > 0.0 ? rnorm / pnorm : std::numeric_limits<double>::infinity();
  const bool ok = std::abs(e0) <= check_tolerance::zero_mode_spectral &&
                  ratio <= check_tolerance::zero_mode_operator;
  return {"zero_mode", ok, std::abs(e0), check_tolerance::zero_mode_spectral,
          "lowest eigenvalue " + fmt(e0) + "; annihilation ratio " +
              fmt(ratio) + " (tol " + fmt(check_tolerance::zero_mode_operator) +
              ")"};
}

CheckResult check_shape_invariance(const PotentialFamily& family,
                                   const PotentialFamily& next,
                                   const MassProfile& mass,
                                   const OrderingParams& ord) {
  const std::vector<double> nodes = probe_nodes(family, 200);
  const ResidualStats stats =
      shape_invariance_residual(family, next, mass, ord, nodes);
  const double analytic = shape_invariance_remainder(family);
  bool ok = stats.stdev <= check_tolerance::shape_invariance_stdev;
  std::string det =
      "mean spacing " + fmt(stats.mean) + " vs analytic " + fmt(analytic);
  if (std::holds_alternative<HarmonicOscillator>(family)) {
    const double gap = std::abs(stats.mean - analytic);
    ok = ok && gap <= check_tolerance::shape_invariance_mean;
    det += "; mean gap " + fmt(gap) + " (tol " +
           fmt(check_tolerance::shape_invariance_mean) + ")";
  }
  return {"shape_invariance", ok, stats.stdev,
          check_tolerance::shape_invariance_stdev, det};
}

CheckResult check_shape_invariance(const PotentialFamily& family,
                                   const MassProfile& mass,
                                   const OrderingParams& ord) {
  return check_shape_invariance(family, successor(family), mass, ord);
}

CheckResult check_constraint_identity(const FamilyConstruction& constr) {
  std::mt19937 rng(2024u);
  const bool full_line =
      std::holds_alternative<MorsePotential>(constr.family);
  std::uniform_real_distribution<double> dist(full_line ? -6.0 : 0.05,
                                              full_line ? 3.0 : 8.0);
  double worst = 0.0;
  for (const double delta : {1.0, 2.0, 5.0}) {
    const MassProfile mass = MassProfile::rational_delta(delta);
    for (int i = 0; i < 100; ++i) {
      worst = std::max(worst, constr.constraint_residual(mass, dist(rng)));
    }
  }
  return {"constraint_identity", worst <= check_tolerance::constraint_identity,
          worst, check_tolerance::constraint_identity,
          "mass-constraint residual at 100 random nodes per delta in "
          "{1, 2, 5}"};
}

CheckResult check_constraint_identity(const PotentialFamily& family) {
  return check_constraint_identity(construction_for(family));
}

CheckResult check_delta1_reduction(const PotentialFamily& family,
                                   const MassProfile& mass,
                                   const OrderingParams& ord,
                                   const DiscretizationGrid& grid) {
  double worst = 0.0;
  for (int i = 0; i < grid.n; ++i) {
    const double x = grid.node(i);
    const PartnerPotentials pp = partner_potentials(family, mass, ord, x);
    const auto [flat_minus, flat_plus] = constant_mass_partners(family, x);
    worst = std::max({worst, std::abs(pp.v_minus - flat_minus),
                      std::abs(pp.v_plus - flat_plus)});
  }
  return {"delta1_reduction", worst <= check_tolerance::delta1_reduction,
          worst, check_tolerance::delta1_reduction,
          "flat-profile agreement of both partners over " +
              std::to_string(grid.n) + " nodes"};
}

CheckResult check_factorized_vs_direct(const DiscreteSystem& sys, int k,
                                       double tol) {
  const VectorX<double> fact = lowest_eigenvalues(sys.h_minus, k);
  const VectorX<double> direct = lowest_eigenvalues(sys.h_direct, k);
  const double worst = (fact - direct).cwiseAbs().maxCoeff();
  return {"factorized_vs_direct", worst <= tol, worst, tol,
          "lowest " + std::to_string(k) + " levels, factorized vs flux form"};
}

CheckResult vm_sign_diagnostic(const PotentialFamily& family,
                               const MassProfile& mass,
                               const OrderingParams& ord) {
  const std::vector<double> nodes = probe_nodes(family, 101);
  std::vector<double> vs_derivative;
  std::vector<double> vs_profile;
  vs_derivative.reserve(nodes.size());
  vs_profile.reserve(nodes.size());
  for (const double x : nodes) {
    const double diff = partner_potentials(family, mass, ord, x).v_minus -
                        closed_form_v_minus_base(family, mass, x);
    const VmPair vm = mass_correction_vm(mass, ord, x);
    vs_derivative.push_back(diff - vm.derivative_form);
    vs_profile.push_back(diff - vm.profile_form);
  }
  const double s_derivative = stdev_of(vs_derivative);
  const double s_profile = stdev_of(vs_profile);
  const bool derivative_wins = s_derivative <= s_profile;
  const VmPair at0 = mass_correction_vm(mass, ord, 0.0);
  std::string det = std::string("resolved: ") +
                    (derivative_wins ? "derivative form" : "profile form") +
                    "; stdev derivative=" + fmt(s_derivative) +
                    ", profile=" + fmt(s_profile) + "; at x=0: " +
                    fmt(at0.derivative_form) + " / " + fmt(at0.profile_form) +
                    "; offset of resolved form " +
                    fmt(derivative_wins ? mean_of(vs_derivative)
                                        : mean_of(vs_profile));
  return {"vm_sign_diagnostic", true, std::min(s_derivative, s_profile),
          check_tolerance::vm_constancy, det};
}

CheckResult check_coulomb_index(const DiscreteSystem& sys,
                                const CoulombPotential& family) {
  const VectorX<double> vals = lowest_eigenvalues(sys.h_minus, 3);
  const double l1 = family.ell + 1.0;
  const auto predicted = [&](int offset, int n) {
    const double ln = family.ell + n + offset;
    return 0.5 * family.q * family.q * (1.0 / (l1 * l1) - 1.0 / (ln * ln));
  };
  double worst[2] = {0.0, 0.0};
  for (int offset = 1; offset <= 2; ++offset) {
    for (int n = 1; n <= 2; ++n) {
      const double pred = predicted(offset, n);
      const double rel = std::abs(vals[n] - pred) / std::abs(pred);
      worst[offset - 1] = std::max(worst[offset - 1], rel);
    }
  }
  const int resolved = worst[0] <= worst[1] ? 1 : 2;
  const double measured = worst[resolved - 1];
  const bool ok = measured <= check_tolerance::coulomb_level &&
                  std::abs(vals[0]) <= check_tolerance::coulomb_ground;
  return {"coulomb_index", ok, measured, check_tolerance::coulomb_level,
          "resolved level offset K=" + std::to_string(resolved) + "; |E0| " +
              fmt(std::abs(vals[0])) + " (tol " +
              fmt(check_tolerance::coulomb_ground) +
              "); rival offset max rel err " + fmt(worst[2 - resolved])};
}

CheckReport run_all(const RunConfig& cfg) {
  CheckReport report;
  report.config = cfg;
  report.grid = resolve_grid(cfg);
  const std::vector<std::string> wanted =
      cfg.checks ? *cfg.checks : default_checks(cfg);

  const auto fresh = [&]() {
    return build_system(cfg.family, mass_for(cfg), ordering_for(cfg),
                        report.grid);
  };

  for (const std::string& name : wanted) {
    CheckResult result{};
    try {
      if (name == "partner_degeneracy") {
        result = check_partner_degeneracy(fresh(), cfg.tolerances.degeneracy);
      } else if (name == "spectrum_vs_analytic") {
        result = check_spectrum_vs_analytic(fresh(), cfg.family, cfg.levels,
                                            cfg.tolerances.spectrum);
      } else if (name == "isospectral_sweep_delta") {
        result = check_isospectral_sweep_delta(cfg);
      } else if (name == "isospectral_sweep_epsilon") {
        result = check_isospectral_sweep_epsilon(cfg);
      } else if (name == "ladder_mapping") {
        const DiscreteSystem base = fresh();
        const DiscreteSystem next = build_system(
            successor(cfg.family), mass_for(cfg), ordering_for(cfg),
            report.grid);
        result = check_ladder_mapping(base, next, 1,
                                      check_tolerance::ladder_alignment);
      } else if (name == "zero_mode") {
        const DiscreteSystem sys = fresh();
        result = check_zero_mode(
            sys, sample_ground_state(cfg.family, mass_for(cfg),
                                     ordering_for(cfg), report.grid));
      } else if (name == "shape_invariance") {
        result =
            check_shape_invariance(cfg.family, mass_for(cfg), ordering_for(cfg));
      } else if (name == "constraint_identity") {
        result = check_constraint_identity(cfg.family);
      } else if (name == "delta1_reduction") {
        result = check_delta1_reduction(cfg.family,
                                        MassProfile::rational_delta(1.0),
                                        ordering_for(cfg),
                                        resolve_grid(cfg, 1.0));
      } else if (name == "factorized_vs_direct") {
        result = check_factorized_vs_direct(fresh(), std::min(cfg.levels, 5),
                                            cfg.tolerances.spectrum);
      } else if (name == "vm_sign_diagnostic") {
        result = vm_sign_diagnostic(cfg.family, mass_for(cfg),
                                    ordering_for(cfg));
      } else if (name == "coulomb_index") {
        const auto* coulomb = std::get_if<CoulombPotential>(&cfg.family);
        if (coulomb == nullptr) {
          throw ArgumentError("coulomb_index requires the coulomb family");
        }
        result = check_coulomb_index(fresh(), *coulomb);
      } else {
        throw ConfigError("unknown check \"" + name + "\"");
      }
    } catch (const std::exception& ex) {
      result = CheckResult{name, false, -1.0, 0.0,
                           std::string("error: ") + ex.what()};
    }
    report.results.push_back(std::move(result));
  }
  std::sort(report.results.begin(), report.results.end(),
            [](const CheckResult& a, const CheckResult& b) {
              return a.name < b.name;
            });
  report.overall = std::all_of(report.results.begin(), report.results.end(),
                               [](const CheckResult& r) { return r.passed; });
  return report;
}

}  // namespace pdmsusy
