#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <climits>
#include <cmath>
#include <random>
#include <vector>

#include "pdmsusy/errors.hpp"
#include "pdmsusy/families.hpp"
#include "pdmsusy/mass.hpp"
#include "pdmsusy/susy.hpp"

using namespace pdmsusy;

namespace {

const OrderingParams kSym0 = OrderingParams::morrow_brownstein(0.0);

std::vector<double> random_nodes(const PotentialFamily& family, int count,
                                 unsigned seed) {
  const bool half_line = !std::holds_alternative<MorsePotential>(family);
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> dist(half_line ? 0.05 : -6.0,
                                              half_line ? 8.0 : 3.0);
  std::vector<double> nodes(count);
  for (double& x : nodes) x = dist(gen);
  return nodes;
}

std::vector<PotentialFamily> all_families() {
  return {HarmonicOscillator{1.0, 1}, CoulombPotential{1.0, 0},
          MorsePotential{-3.0, 1.0, 1.0}};
}

}  // namespace

TEST_CASE("superpotential at pinned points") {
  const MassProfile m2 = MassProfile::rational_delta(2.0);

  const Jet2d ho = superpotential_w(HarmonicOscillator{1.0, 0}, m2, kSym0, 1.0);
  CHECK(ho.value == doctest::Approx(1.6712818481621697).epsilon(1e-15));
  CHECK(ho.d1 == doctest::Approx(2.4543114951379827).epsilon(1e-15));
  CHECK(std::isnan(ho.d2));

  const Jet2d mo =
      superpotential_w(MorsePotential{-3.0, 1.0, 1.0}, m2, kSym0, 0.0);
  CHECK(mo.value == doctest::Approx(-4.0).epsilon(1e-15));
  CHECK(mo.d1 == doctest::Approx(3.5).epsilon(1e-14));
}

TEST_CASE("superpotential is singular at the half-line wall") {
  const MassProfile m2 = MassProfile::rational_delta(2.0);
  CHECK_THROWS_AS(superpotential_w(HarmonicOscillator{1.0, 0}, m2, kSym0, 0.0),
                  SingularPointError);
  CHECK_THROWS_AS(superpotential_w(CoulombPotential{1.0, 0}, m2, kSym0, 0.0),
                  SingularPointError);
  CHECK_NOTHROW(superpotential_w(MorsePotential{-3.0, 1.0, 1.0}, m2, kSym0, 0.0));
}

TEST_CASE("partner potentials at pinned points") {
  const MassProfile m2 = MassProfile::rational_delta(2.0);

  const PartnerPotentials ho =
      partner_potentials(HarmonicOscillator{1.0, 1}, m2, kSym0, 1.0);
  CHECK(ho.v_minus == doctest::Approx(-0.61098415582266464).epsilon(1e-14));
  CHECK(ho.v_plus == doctest::Approx(1.0164379677060616).epsilon(1e-14));

  const PartnerPotentials mo =
      partner_potentials(MorsePotential{-3.0, 1.0, 1.0}, m2, kSym0, 0.0);
  CHECK(mo.v_minus == doctest::Approx(1.5625).epsilon(1e-14));
  CHECK(mo.v_plus == doctest::Approx(2.5625).epsilon(1e-14));

  const PartnerPotentials co = partner_potentials(
      CoulombPotential{1.0, 0}, m2, OrderingParams::morrow_brownstein(-1.0),
      2.0);
  CHECK(co.v_minus == doctest::Approx(0.19590844016789395).epsilon(1e-13));
  CHECK(co.v_plus == doctest::Approx(0.29948844313628778).epsilon(1e-13));
}

TEST_CASE("mass correction transcriptions at pinned points") {
  const MassProfile m2 = MassProfile::rational_delta(2.0);

  const VmPair at0 = mass_correction_vm(m2, kSym0, 0.0);
  CHECK(at0.derivative_form == doctest::Approx(0.0625).epsilon(1e-14));
  CHECK(at0.profile_form == doctest::Approx(-0.0625).epsilon(1e-14));

  const VmPair at07 = mass_correction_vm(m2, kSym0, 0.7);
  CHECK(at07.derivative_form ==
        doctest::Approx(0.003898157290478102).epsilon(1e-12));
}

TEST_CASE("profile transcription is the negated derivative transcription") {
  for (double delta : {0.5, 2.0, 5.0}) {
    const MassProfile m = MassProfile::rational_delta(delta);
    for (double eps : {-1.0, -0.5, 0.0}) {
      const OrderingParams ord = OrderingParams::morrow_brownstein(eps);
      for (double x : {-2.2, -0.3, 0.0, 0.8, 3.1}) {
        const VmPair vm = mass_correction_vm(m, ord, x);
        CHECK(vm.profile_form == doctest::Approx(-vm.derivative_form)
                                     .epsilon(1e-12)
                                     .scale(1.0));
      }
    }
  }
}

TEST_CASE("canonical minus potential is the closed form plus the derivative"
          " transcription") {
  const MassProfile m2 = MassProfile::rational_delta(2.0);
  for (const PotentialFamily& family : all_families()) {
    for (double eps : {-1.0, 0.0}) {
      const OrderingParams ord = OrderingParams::morrow_brownstein(eps);
      for (double x : random_nodes(family, 20, 11u)) {
        const double canonical = partner_potentials(family, m2, ord, x).v_minus;
        const double closed = closed_form_v_minus(family, m2, ord, x);
        CHECK(std::abs(canonical - closed) <=
              1e-10 * std::max(1.0, std::abs(canonical)));
      }
    }
  }
}

TEST_CASE("ordering scalar term at pinned points") {
  const MassProfile m2 = MassProfile::rational_delta(2.0);
  CHECK(ordering_term_u(m2, -0.5, 0.0, 0.0) ==
        doctest::Approx(-0.125).epsilon(1e-14));
  CHECK(ordering_term_u(m2, -0.5, 0.0, 0.6) ==
        doctest::Approx(-0.04033469003688179).epsilon(1e-12));
  CHECK(ordering_term_u(MassProfile::constant(1.0), -0.5, 0.0, 1.3) == 0.0);
}

TEST_CASE("flat-mass superpotential jets") {
  const Jet2d mo = constant_mass_phi(MorsePotential{-3.0, 1.0, 1.0}, 0.0);
  CHECK(mo.value == doctest::Approx(-2.0).epsilon(1e-15));
  CHECK(mo.d1 == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(mo.d2 == doctest::Approx(1.0).epsilon(1e-15));

  const Jet2d ho = constant_mass_phi(HarmonicOscillator{1.0, 1}, 2.0);
  CHECK(ho.value == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(ho.d1 == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(ho.d2 == doctest::Approx(-0.5).epsilon(1e-15));
}

TEST_CASE("family superpotential agrees with the generic construction") {
  for (const PotentialFamily& family : all_families()) {
    const FamilyConstruction constr = construction_for(family);
    for (double delta : {1.0, 2.0, 5.0}) {
      const MassProfile mass = MassProfile::rational_delta(delta);
      for (double eps : {-1.0, -0.5, 0.0}) {
        const OrderingParams ord = OrderingParams::morrow_brownstein(eps);
        for (double x : random_nodes(family, 100, 2024u)) {
          const Jet2d direct = superpotential_w(family, mass, ord, x);
          const Jet2d rebuilt =
              superpotential_from_construction(constr, mass, ord, x);
          const double scale = std::max(1.0, std::abs(direct.value));
          CHECK(std::abs(direct.value - rebuilt.value) <= 1e-9 * scale);
          const double dscale = std::max(1.0, std::abs(direct.d1));
          CHECK(std::abs(direct.d1 - rebuilt.d1) <= 1e-8 * dscale);
        }
      }
    }
  }
}

TEST_CASE("construction data satisfies the mass constraint") {
  for (const PotentialFamily& family : all_families()) {
    const FamilyConstruction constr = construction_for(family);
    for (double delta : {1.0, 2.0, 5.0}) {
      const MassProfile mass = MassProfile::rational_delta(delta);
      for (double x : random_nodes(family, 100, 7u)) {
        CHECK(constr.constraint_residual(mass, x) <= 1e-10);
      }
    }
  }
}

TEST_CASE("ground state is annihilated by the lowering operator") {
  // A- psi = (1/sqrt2) [ m^{e/2} (m^{-(e+1)/2} psi)' + (W/sqrt m) psi ]
  // evaluated with exact jets; zero for the zero-energy ground state.
  const MassProfile m2 = MassProfile::rational_delta(2.0);
  for (const PotentialFamily& family : all_families()) {
    for (double eps : {-1.0, 0.0}) {
      const OrderingParams ord = OrderingParams::morrow_brownstein(eps);
      for (double x : random_nodes(family, 25, 99u)) {
        const Jet2d mj = m2.mass(x);
        const Jet2d psi = ground_state_jet(family, m2, ord, x);
        if (psi.value == 0.0) continue;  // underflowed tail
        const Jet2d scaled = pow(mj, -(eps + 1.0) / 2.0) * psi;
        const double w = superpotential_w(family, m2, ord, x).value;
        const double applied =
            (std::pow(mj.value, eps / 2.0) * scaled.d1 +
             w / std::sqrt(mj.value) * psi.value) /
            std::sqrt(2.0);
        const double scale = std::abs(psi.value) * (1.0 + std::abs(w));
        CHECK(std::abs(applied) <= 1e-9 * scale);
      }
    }
  }
}

TEST_CASE("ground state value is independent of the ordering epsilon") {
  const MassProfile m2 = MassProfile::rational_delta(2.0);
  for (const PotentialFamily& family : all_families()) {
    for (double x : random_nodes(family, 20, 5u)) {
      const double base =
          ground_state(family, m2, OrderingParams::morrow_brownstein(0.0), x);
      for (double eps : {-1.0, -0.5, -1.0 / 3.0}) {
        const double other =
            ground_state(family, m2, OrderingParams::morrow_brownstein(eps), x);
        CHECK(std::abs(other - base) <= 1e-12 * std::max(1.0, std::abs(base)));
      }
    }
  }
}

TEST_CASE("ground state vanishes at and beyond the half-line wall") {
  const MassProfile m2 = MassProfile::rational_delta(2.0);
  for (double x : {0.0, -0.5, -3.0}) {
    CHECK(ground_state(HarmonicOscillator{1.0, 1}, m2, kSym0, x) == 0.0);
    CHECK(ground_state(CoulombPotential{1.0, 0}, m2, kSym0, x) == 0.0);
    const Jet2d j = ground_state_jet(CoulombPotential{1.0, 0}, m2, kSym0, x);
    CHECK(j.value == 0.0);
    CHECK(j.d1 == 0.0);
  }
  CHECK(ground_state(MorsePotential{-3.0, 1.0, 1.0}, m2, kSym0, -2.0) > 0.0);
}

TEST_CASE("partner potentials reduce to the flat-mass pair at delta = 1") {
  const MassProfile m1 = MassProfile::rational_delta(1.0);
  for (const PotentialFamily& family : all_families()) {
    for (double x : random_nodes(family, 50, 31u)) {
      const PartnerPotentials pdm = partner_potentials(family, m1, kSym0, x);
      const auto [vm, vp] = constant_mass_partners(family, x);
      const double scale = std::max(1.0, std::abs(vm));
      CHECK(std::abs(pdm.v_minus - vm) <= 1e-13 * scale);
      CHECK(std::abs(pdm.v_plus - vp) <= 1e-13 * std::max(1.0, std::abs(vp)));
    }
  }
}

TEST_CASE("shape invariance: the partner gap is x-independent") {
  const MassProfile m2 = MassProfile::rational_delta(2.0);
  for (const PotentialFamily& family : all_families()) {
    const std::vector<double> nodes = random_nodes(family, 200, 77u);
    const ResidualStats stats =
        shape_invariance_residual(family, m2, kSym0, nodes);
    CHECK(stats.stdev <= 1e-10);
    CHECK(std::abs(stats.mean - shape_invariance_remainder(family)) <= 1e-10);
  }
}

TEST_CASE("a mismatched successor breaks shape invariance") {
  const MassProfile m2 = MassProfile::rational_delta(2.0);
  const HarmonicOscillator base{1.0, 1};
  const ResidualStats stats = shape_invariance_residual(
      PotentialFamily{base}, PotentialFamily{HarmonicOscillator{1.0, 3}}, m2,
      kSym0, random_nodes(PotentialFamily{base}, 200, 77u));
  CHECK(stats.stdev > 1e-6);
}

TEST_CASE("analytic spectra") {
  CHECK(analytic_spectrum(HarmonicOscillator{1.0, 1}, 0) == 0.0);
  CHECK(analytic_spectrum(HarmonicOscillator{1.0, 1}, 3) ==
        doctest::Approx(6.0).epsilon(1e-15));
  CHECK(analytic_spectrum(HarmonicOscillator{1.5, 0}, 2) ==
        doctest::Approx(6.0).epsilon(1e-15));

  CHECK(analytic_spectrum(CoulombPotential{1.0, 0}, 1) ==
        doctest::Approx(0.375).epsilon(1e-15));
  CHECK(analytic_spectrum(CoulombPotential{1.0, 0}, 2) ==
        doctest::Approx(4.0 / 9.0).epsilon(1e-15));

  const MorsePotential morse{-3.0, 1.0, 1.0};
  CHECK(analytic_spectrum(morse, 0) == 0.0);
  CHECK(analytic_spectrum(morse, 1) == doctest::Approx(2.5).epsilon(1e-15));
  CHECK(analytic_spectrum(morse, 2) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK_THROWS_AS(analytic_spectrum(morse, 3), NoBoundStateError);
  CHECK_THROWS_AS(analytic_spectrum(morse, -1), ArgumentError);
}

TEST_CASE("bound state counts") {
  CHECK(bound_state_count(MorsePotential{-3.0, 1.0, 1.0}) == 3);
  CHECK(bound_state_count(MorsePotential{-3.5, 1.0, 1.0}) == 4);
  CHECK(bound_state_count(HarmonicOscillator{1.0, 0}) == INT_MAX);
  CHECK(bound_state_count(CoulombPotential{1.0, 0}) == INT_MAX);
}

TEST_CASE("successor steps and analytic level spacings") {
  const PotentialFamily ho = successor(HarmonicOscillator{2.0, 1});
  CHECK(std::get<HarmonicOscillator>(ho).ell == 2);
  CHECK(shape_invariance_remainder(HarmonicOscillator{2.0, 1}) ==
        doctest::Approx(4.0).epsilon(1e-15));

  const PotentialFamily co = successor(CoulombPotential{1.0, 0});
  CHECK(std::get<CoulombPotential>(co).ell == 1);
  CHECK(shape_invariance_remainder(CoulombPotential{1.0, 0}) ==
        doctest::Approx(0.375).epsilon(1e-15));

  const PotentialFamily mo = successor(MorsePotential{-3.0, 1.0, 1.0});
  CHECK(std::get<MorsePotential>(mo).a == doctest::Approx(-2.0).epsilon(1e-15));
  CHECK(shape_invariance_remainder(MorsePotential{-3.0, 1.0, 1.0}) ==
        doctest::Approx(2.5).epsilon(1e-15));
}

TEST_CASE("family and ordering validation") {
  CHECK_THROWS_AS(validate_family(HarmonicOscillator{0.0, 1}), ArgumentError);
  CHECK_THROWS_AS(validate_family(HarmonicOscillator{1.0, -1}), ArgumentError);
  CHECK_THROWS_AS(validate_family(CoulombPotential{-1.0, 0}), ArgumentError);
  CHECK_THROWS_WITH_AS(validate_family(MorsePotential{1.0, 1.0, 1.0}),
                       "a must be negative", ArgumentError);
  CHECK_THROWS_AS(validate_family(MorsePotential{-3.0, 0.0, 1.0}),
                  ArgumentError);
  CHECK_THROWS_AS(validate_family(MorsePotential{-3.0, 1.0, -1.0}),
                  ArgumentError);
  CHECK_NOTHROW(validate_family(MorsePotential{-3.0, 1.0, 1.0}));

  const OrderingParams mb = OrderingParams::morrow_brownstein(0.0);
  CHECK(mb.epsilon == 0.0);
  CHECK(mb.eta == -0.5);
  CHECK(mb.rho == -0.5);
  CHECK_NOTHROW(OrderingParams::general(-0.5, 0.0, -0.5));
  CHECK_THROWS_AS(OrderingParams::general(-0.5, 0.0, 0.0), ArgumentError);
}

TEST_CASE("family names") {
  CHECK(family_name(HarmonicOscillator{1.0, 0}) == "ho");
  CHECK(family_name(CoulombPotential{1.0, 0}) == "coulomb");
  CHECK(family_name(MorsePotential{-3.0, 1.0, 1.0}) == "morse");
}
