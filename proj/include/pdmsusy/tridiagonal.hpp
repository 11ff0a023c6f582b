#pragma once

#include <Eigen/Core>

#include "pdmsusy/errors.hpp"

namespace pdmsusy {

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Symmetric tridiagonal matrix: main diagonal plus one off-diagonal
/// (dim-1 entries) shared by both triangles.
template <typename Scalar>
struct TridiagonalMatrix {
  VectorX<Scalar> diag;
  VectorX<Scalar> off;

  Eigen::Index dim() const { return diag.size(); }
};

/// Two-entry-per-row operator mapping n node values to n-1 midpoint
/// values: row i = lo[i]*psi[i] + hi[i]*psi[i+1]. The adjoint partner
/// operator is its exact matrix transpose.
template <typename Scalar>
struct BidiagonalOperator {
  VectorX<Scalar> lo;
  VectorX<Scalar> hi;

  Eigen::Index rows() const { return lo.size(); }
  Eigen::Index cols() const { return lo.size() + 1; }
};

template <typename Scalar, typename Derived>
VectorX<Scalar> apply(const TridiagonalMatrix<Scalar>& t,
                      const Eigen::MatrixBase<Derived>& v) {
  if (v.size() != t.dim()) {
    throw ArgumentError("tridiagonal apply: dimension mismatch");
  }
  const Eigen::Index n = t.dim();
  VectorX<Scalar> out = t.diag.cwiseProduct(v);
  if (n > 1) {
    out.head(n - 1) += t.off.cwiseProduct(v.tail(n - 1));
    out.tail(n - 1) += t.off.cwiseProduct(v.head(n - 1));
  }
  return out;
}

template <typename Scalar, typename Derived>
VectorX<Scalar> apply(const BidiagonalOperator<Scalar>& a,
                      const Eigen::MatrixBase<Derived>& v) {
  if (v.size() != a.cols()) {
    throw ArgumentError("ladder apply: dimension mismatch");
  }
  const Eigen::Index r = a.rows();
  return a.lo.cwiseProduct(v.head(r)) + a.hi.cwiseProduct(v.tail(r));
}

template <typename Scalar, typename Derived>
VectorX<Scalar> apply_transpose(const BidiagonalOperator<Scalar>& a,
                                const Eigen::MatrixBase<Derived>& v) {
  if (v.size() != a.rows()) {
    throw ArgumentError("ladder transpose apply: dimension mismatch");
  }
  const Eigen::Index r = a.rows();
  VectorX<Scalar> out = VectorX<Scalar>::Zero(r + 1);
  out.head(r) += a.lo.cwiseProduct(v);
  out.tail(r) += a.hi.cwiseProduct(v);
  return out;
}

/// Infinity norm (max absolute row sum).
template <typename Scalar>
Scalar norm_inf(const TridiagonalMatrix<Scalar>& t) {
  const Eigen::Index n = t.dim();
  Scalar best(0);
  for (Eigen::Index i = 0; i < n; ++i) {
    using std::abs;
    Scalar row = abs(t.diag[i]);
    if (i > 0) row += abs(t.off[i - 1]);
    if (i + 1 < n) row += abs(t.off[i]);
    best = row > best ? row : best;
  }
  return best;
}

}  // namespace pdmsusy
