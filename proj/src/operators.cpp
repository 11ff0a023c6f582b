#include "pdmsusy/operators.hpp"

#include <cmath>

#include "pdmsusy/errors.hpp"

namespace pdmsusy {

BidiagonalOperator<double> assemble_ladder(const PotentialFamily& family,
                                           const MassProfile& mass,
                                           const OrderingParams& ord,
                                           const DiscretizationGrid& grid) {
  const int n = grid.n;
  const double eps = ord.epsilon;
  VectorX<double> f(n);
  for (int i = 0; i < n; ++i) {
    f[i] = std::pow(mass.mass(grid.node(i)).value, -(eps + 1.0) / 2.0);
  }
  BidiagonalOperator<double> a;
  a.lo.resize(n - 1);
  a.hi.resize(n - 1);
  const double inv = 1.0 / (std::sqrt(2.0) * grid.h);
  for (int i = 0; i + 1 < n; ++i) {
    const double xm = grid.midpoint(i);
    const double m_mid = mass.mass(xm).value;
    const double g = std::pow(m_mid, eps / 2.0);
    const double w = superpotential_w(family, mass, ord, xm).value;
    const double s = 0.5 * w / std::sqrt(2.0 * m_mid);
    a.lo[i] = -inv * g * f[i] + s;
    a.hi[i] = inv * g * f[i + 1] + s;
  }
  return a;
}

std::pair<TridiagonalMatrix<double>, TridiagonalMatrix<double>>
hamiltonians_factorized(const BidiagonalOperator<double>& a_minus) {
  const Eigen::Index rows = a_minus.rows();
  const Eigen::Index n = rows + 1;
  TridiagonalMatrix<double> h_minus;
  h_minus.diag = VectorX<double>::Zero(n);
  h_minus.off.resize(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    h_minus.diag[i] += a_minus.lo[i] * a_minus.lo[i];
    h_minus.diag[i + 1] += a_minus.hi[i] * a_minus.hi[i];
    h_minus.off[i] = a_minus.lo[i] * a_minus.hi[i];
  }
  TridiagonalMatrix<double> h_plus;
  h_plus.diag.resize(rows);
  h_plus.off.resize(rows > 1 ? rows - 1 : 0);
  for (Eigen::Index i = 0; i < rows; ++i) {
    h_plus.diag[i] =
        a_minus.lo[i] * a_minus.lo[i] + a_minus.hi[i] * a_minus.hi[i];
    if (i + 1 < rows) {
      h_plus.off[i] = a_minus.hi[i] * a_minus.lo[i + 1];
    }
  }
  return {std::move(h_minus), std::move(h_plus)};
}

TridiagonalMatrix<double> hamiltonian_direct(
    const MassProfile& mass, const OrderingParams& ord,
    const VectorX<double>& potential_nodes, const DiscretizationGrid& grid) {
  const int n = grid.n;
  if (potential_nodes.size() != n) {
    throw ArgumentError("direct Hamiltonian: potential node count mismatch");
  }
  const double eps = ord.epsilon;
  VectorX<double> f(n), g(n + 1);
  for (int i = 0; i < n; ++i) {
    f[i] = std::pow(mass.mass(grid.node(i)).value, -(eps + 1.0) / 2.0);
  }
  for (int i = 0; i <= n; ++i) {
    g[i] = std::pow(mass.mass(grid.face(i)).value, eps);
  }
  const double inv_h2 = 1.0 / (grid.h * grid.h);
  TridiagonalMatrix<double> t;
  t.diag.resize(n);
  t.off.resize(n - 1);
  for (int i = 0; i < n; ++i) {
    t.diag[i] = 0.5 * f[i] * f[i] * (g[i] + g[i + 1]) * inv_h2 +
                potential_nodes[i];
    if (i + 1 < n) {
      t.off[i] = -0.5 * f[i] * f[i + 1] * g[i + 1] * inv_h2;
    }
  }
  return t;
}

VectorX<double> apply_expanded_hamiltonian(const MassProfile& mass,
                                           double eta, double epsilon,
                                           const VectorX<double>& potential_nodes,
                                           const DiscretizationGrid& grid,
                                           const VectorX<double>& psi) {
  const int n = grid.n;
  if (potential_nodes.size() != n || psi.size() != n) {
    throw ArgumentError("expanded Hamiltonian: node count mismatch");
  }
  const double inv_h2 = 1.0 / (grid.h * grid.h);
  const double inv_2h = 1.0 / (2.0 * grid.h);
  VectorX<double> out(n);
  for (int i = 0; i < n; ++i) {
    const double left = i > 0 ? psi[i - 1] : 0.0;
    const double right = i + 1 < n ? psi[i + 1] : 0.0;
    const Jet2d m = mass.mass(grid.node(i));
    const double lap = (right - 2.0 * psi[i] + left) * inv_h2;
    const double grad = (right - left) * inv_2h;
    const double u = ordering_term_u(mass, eta, epsilon, grid.node(i));
    out[i] = -0.5 * lap / m.value +
             0.5 * m.d1 / (m.value * m.value) * grad +
             (u + potential_nodes[i]) * psi[i];
  }
  return out;
}

}  // namespace pdmsusy
