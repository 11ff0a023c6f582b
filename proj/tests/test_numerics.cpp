#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "pdmsusy/eigensolver.hpp"
#include "pdmsusy/errors.hpp"
#include "pdmsusy/grid.hpp"
#include "pdmsusy/operators.hpp"
#include "pdmsusy/system.hpp"
#include "pdmsusy/tridiagonal.hpp"

using namespace pdmsusy;

namespace {

TridiagonalMatrix<double> make_tridiag(std::initializer_list<double> diag,
                                       std::initializer_list<double> off) {
  TridiagonalMatrix<double> t;
  t.diag = Eigen::Map<const VectorX<double>>(diag.begin(),
                                             static_cast<Eigen::Index>(diag.size()));
  t.off = Eigen::Map<const VectorX<double>>(off.begin(),
                                            static_cast<Eigen::Index>(off.size()));
  return t;
}

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

BidiagonalOperator<double> toy_ladder() {
  BidiagonalOperator<double> a;
  a.lo = VectorX<double>::Constant(2, -kInvSqrt2);
  a.hi = VectorX<double>::Constant(2, kInvSqrt2);
  return a;
}

}  // namespace

TEST_CASE("grid geometry") {
  const DiscretizationGrid g = build_grid(0.0, 4.0, 3);
  CHECK(g.h == 1.0);
  CHECK(g.node(0) == 1.0);
  CHECK(g.node(1) == 2.0);
  CHECK(g.node(2) == 3.0);
  CHECK(g.face(0) == 0.5);
  CHECK(g.face(3) == 3.5);
  for (int i = 0; i + 1 < g.n; ++i) {
    CHECK(g.face(i + 1) == g.midpoint(i));
  }
  CHECK_THROWS_AS(build_grid(1.0, 1.0, 10), ArgumentError);
  CHECK_THROWS_AS(build_grid(2.0, 1.0, 10), ArgumentError);
  CHECK_THROWS_AS(build_grid(0.0, 1.0, 2), ArgumentError);
}

TEST_CASE("tridiagonal and ladder application") {
  const auto t = make_tridiag({2.0, 2.0, 2.0}, {-1.0, -1.0});
  VectorX<double> v(3);
  v << 1.0, 2.0, 3.0;
  const VectorX<double> tv = apply(t, v);
  CHECK(tv[0] == 0.0);
  CHECK(tv[1] == 0.0);
  CHECK(tv[2] == 4.0);
  CHECK(norm_inf(t) == 4.0);

  const BidiagonalOperator<double> a = toy_ladder();
  VectorX<double> w(3);
  w << 1.0, 2.0, 4.0;
  const VectorX<double> aw = apply(a, w);
  CHECK(aw.size() == 2);
  CHECK(aw[0] == doctest::Approx(kInvSqrt2).epsilon(1e-15));
  CHECK(aw[1] == doctest::Approx(2.0 * kInvSqrt2).epsilon(1e-15));

  VectorX<double> m(2);
  m << 1.0, 1.0;
  const VectorX<double> up = apply_transpose(a, m);
  CHECK(up.size() == 3);
  CHECK(up[0] == doctest::Approx(-kInvSqrt2).epsilon(1e-15));
  CHECK(up[1] == 0.0);
  CHECK(up[2] == doctest::Approx(kInvSqrt2).epsilon(1e-15));

  CHECK_THROWS_AS(apply(t, VectorX<double>::Ones(4)), ArgumentError);
  CHECK_THROWS_AS(apply(a, VectorX<double>::Ones(2)), ArgumentError);
  CHECK_THROWS_AS(apply_transpose(a, VectorX<double>::Ones(3)), ArgumentError);
}

TEST_CASE("factorized partners of the toy ladder") {
  const auto [h_minus, h_plus] = hamiltonians_factorized(toy_ladder());

  CHECK(h_minus.dim() == 3);
  CHECK(h_minus.diag[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(h_minus.diag[1] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(h_minus.diag[2] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(h_minus.off[0] == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(h_minus.off[1] == doctest::Approx(-0.5).epsilon(1e-15));

  CHECK(h_plus.dim() == 2);
  CHECK(h_plus.diag[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(h_plus.off[0] == doctest::Approx(-0.5).epsilon(1e-15));

  const VectorX<double> em = lowest_eigenvalues(h_minus, 3);
  CHECK(em[0] == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
  CHECK(em[1] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(em[2] == doctest::Approx(1.5).epsilon(1e-12));
  const VectorX<double> ep = lowest_eigenvalues(h_plus, 2);
  CHECK(ep[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(ep[1] == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("bisection eigenvalues on closed-form matrices") {
  const auto diag3 = make_tridiag({3.0, 1.0, 2.0}, {0.0, 0.0});
  const VectorX<double> d = lowest_eigenvalues(diag3, 3);
  CHECK(d[0] == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(d[1] == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(d[2] == doctest::Approx(3.0).epsilon(1e-13));

  // half the (-1, 2, -1) Laplacian: eigenvalues 1 -+ sqrt2/2 and 1
  const auto lap = make_tridiag({1.0, 1.0, 1.0}, {-0.5, -0.5});
  const VectorX<double> e = lowest_eigenvalues(lap, 3);
  CHECK(e[0] == doctest::Approx(1.0 - std::sqrt(0.5)).epsilon(1e-12));
  CHECK(e[1] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(e[2] == doctest::Approx(1.0 + std::sqrt(0.5)).epsilon(1e-12));

  CHECK(eigenvalue_count_below(lap, 0.1) == 0);
  CHECK(eigenvalue_count_below(lap, 0.5) == 1);
  CHECK(eigenvalue_count_below(lap, 1.2) == 2);
  CHECK(eigenvalue_count_below(lap, 2.0) == 3);
}

TEST_CASE("eigenpairs carry converged orthonormal vectors") {
  const auto lap = make_tridiag({1.0, 1.0, 1.0}, {-0.5, -0.5});
  const double h = 0.25;
  const EigenSolution<double> sol = lowest_eigenpairs(lap, 3, h);

  for (int j = 0; j < 3; ++j) {
    const VectorX<double> x = sol.eigenvectors.col(j);
    const VectorX<double> res = apply(lap, x) - sol.eigenvalues[j] * x;
    CHECK(res.norm() <= 1e-10 * x.norm());
    for (int i = 0; i <= j; ++i) {
      const double dot = sol.eigenvectors.col(i).dot(x) * h;
      CHECK(std::abs(dot - (i == j ? 1.0 : 0.0)) <= 1e-10);
    }
    Eigen::Index imax = 0;
    x.cwiseAbs().maxCoeff(&imax);
    CHECK(x[imax] > 0.0);
  }
  for (int j = 1; j < 3; ++j) {
    CHECK(sol.eigenvalues[j - 1] <= sol.eigenvalues[j]);
  }

  // the pair routine reuses the bisection values verbatim
  const VectorX<double> direct = lowest_eigenvalues(lap, 3);
  for (int j = 0; j < 3; ++j) {
    CHECK(sol.eigenvalues[j] == direct[j]);
  }
}

TEST_CASE("solver matches the characteristic-polynomial oracle") {
  std::mt19937 gen(12345);
  std::uniform_int_distribution<int> dim_dist(2, 12);
  std::uniform_real_distribution<double> entry(-2.0, 2.0);

  for (int trial = 0; trial < 200; ++trial) {
    const int n = dim_dist(gen);
    std::vector<double> diag(static_cast<std::size_t>(n));
    std::vector<double> off(static_cast<std::size_t>(n - 1));
    for (double& v : diag) v = entry(gen);
    for (double& v : off) v = entry(gen);

    TridiagonalMatrix<double> t;
    t.diag = Eigen::Map<const VectorX<double>>(diag.data(), n);
    t.off = Eigen::Map<const VectorX<double>>(off.data(), n - 1);

    const int k = std::min(3, n);
    const VectorX<double> mine = lowest_eigenvalues(t, k);
    const std::vector<double> ref = oracle::lowest_eigenvalues(diag, off, k);

    Eigen::MatrixXd dense = Eigen::MatrixXd::Zero(n, n);
    dense.diagonal() = t.diag;
    if (n > 1) {
      dense.diagonal(1) = t.off;
      dense.diagonal(-1) = t.off;
    }
    const Eigen::VectorXd full =
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(dense).eigenvalues();

    for (int j = 0; j < k; ++j) {
      CHECK(std::abs(mine[j] - ref[static_cast<std::size_t>(j)]) <= 1e-9);
      CHECK(std::abs(mine[j] - full[j]) <= 1e-9);
    }
  }
}

TEST_CASE("clustered eigenvalues still produce an orthonormal basis") {
  const int n = 40;
  TridiagonalMatrix<double> t;
  t.diag = VectorX<double>::Ones(n);
  t.off = VectorX<double>::Constant(n - 1, 1e-14);
  const EigenSolution<double> sol = lowest_eigenpairs(t, 3);
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      CHECK(std::abs(sol.eigenvectors.col(i).dot(sol.eigenvectors.col(j))) <=
            1e-8);
    }
  }
}

TEST_CASE("solver argument validation") {
  const auto lap = make_tridiag({1.0, 1.0, 1.0}, {-0.5, -0.5});
  CHECK_THROWS_AS(lowest_eigenvalues(lap, 0), ArgumentError);
  CHECK_THROWS_AS(lowest_eigenvalues(lap, 4), ArgumentError);
  CHECK_THROWS_AS(lowest_eigenpairs(lap, 2, 0.0), ArgumentError);
  CHECK_THROWS_AS(lowest_eigenpairs(lap, 2, -1.0), ArgumentError);
}

TEST_CASE("factorized partners are exactly degenerate on coarse grids") {
  struct Case {
    PotentialFamily family;
    double x_min;
    double x_max;
  };
  const std::vector<Case> cases = {
      {HarmonicOscillator{1.0, 1}, 0.0, 10.0},
      {CoulombPotential{1.0, 0}, 0.0, 40.0},
      {MorsePotential{-3.0, 1.0, 1.0}, -10.0, 5.0},
  };
  for (const Case& c : cases) {
    for (double delta : {1.0, 2.0}) {
      for (double eps : {0.0, -1.0}) {
        const MassProfile mass = MassProfile::rational_delta(delta);
        const OrderingParams ord = OrderingParams::morrow_brownstein(eps);
        const DiscreteSystem sys =
            build_system(c.family, mass, ord, build_grid(c.x_min, c.x_max, 60));
        const VectorX<double> minus = lowest_eigenvalues(sys.h_minus, 4);
        const VectorX<double> plus = lowest_eigenvalues(sys.h_plus, 3);
        for (int i = 0; i < 3; ++i) {
          const double scale =
              std::max(std::abs(plus[i]), std::abs(minus[i + 1]));
          CHECK(std::abs(plus[i] - minus[i + 1]) <= 1e-10 * scale);
        }
      }
    }
  }
}

TEST_CASE("energies converge at second order in the step") {
  const HarmonicOscillator ho{1.0, 1};
  const MassProfile mass = MassProfile::rational_delta(2.0);
  const OrderingParams ord = OrderingParams::morrow_brownstein(0.0);
  const double exact = analytic_spectrum(ho, 2);

  auto e2_error = [&](int n) {
    const DiscreteSystem sys =
        build_system(ho, mass, ord, build_grid(0.0, 12.0, n));
    return std::abs(lowest_eigenvalues(sys.h_minus, 3)[2] - exact);
  };
  const double coarse = e2_error(500);
  const double fine = e2_error(1001);  // exactly half the step
  const double ratio = coarse / fine;
  CHECK(ratio >= 3.5);
  CHECK(ratio <= 4.5);
}

TEST_CASE("flux-form matrix matches the expanded kinetic operator") {
  const MassProfile mass = MassProfile::rational_delta(2.0);
  const OrderingParams ord = OrderingParams::morrow_brownstein(0.0);

  auto max_diff = [&](int n) {
    const DiscretizationGrid grid = build_grid(-8.0, 8.0, n);
    const VectorX<double> zero = VectorX<double>::Zero(n);
    VectorX<double> psi(n);
    for (int i = 0; i < n; ++i) {
      const double x = grid.node(i);
      psi[i] = std::exp(-x * x);
    }
    const TridiagonalMatrix<double> direct =
        hamiltonian_direct(mass, ord, zero, grid);
    const VectorX<double> via_matrix = apply(direct, psi);
    const VectorX<double> via_expansion =
        apply_expanded_hamiltonian(mass, ord.eta, ord.epsilon, zero, grid, psi);
    return (via_matrix - via_expansion).cwiseAbs().maxCoeff();
  };

  const double coarse = max_diff(400);
  const double fine = max_diff(801);
  CHECK(coarse / fine >= 3.2);
  CHECK(coarse / fine <= 4.8);
}
