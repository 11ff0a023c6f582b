#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "pdmsusy/errors.hpp"
#include "pdmsusy/tridiagonal.hpp"

namespace pdmsusy {

template <typename Scalar>
struct EigenSolution {
  VectorX<Scalar> eigenvalues;  // ascending
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>
      eigenvectors;  // column j pairs with eigenvalues[j]; sum psi_i^2 h = 1
};

namespace detail {

template <typename Scalar>
Scalar pivot_floor(const TridiagonalMatrix<Scalar>& t) {
  Scalar maxe2(1);
  for (Eigen::Index i = 0; i + 1 < t.dim(); ++i) {
    const Scalar e2 = t.off[i] * t.off[i];
    maxe2 = e2 > maxe2 ? e2 : maxe2;
  }
  return std::numeric_limits<Scalar>::min() * maxe2;
}

/// Deterministic start vector for inverse iteration; a fixed linear
/// congruential stream keeps runs bit-reproducible.
template <typename Scalar>
VectorX<Scalar> start_vector(Eigen::Index n, unsigned seed) {
  VectorX<Scalar> v(n);
  std::uint64_t state = 0x9e3779b97f4a7c15ull + 0x100000001b3ull * seed;
  for (Eigen::Index i = 0; i < n; ++i) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    const auto bits = static_cast<std::uint32_t>(state >> 33);
    v[i] = Scalar(1) + Scalar(bits) / Scalar(8589934592.0);  // in [1, 1.5)
  }
  return v;
}

/// Tridiagonal LU with partial pivoting of (T - lambda I); layouts follow
/// the classic dl/d/du/du2 scheme with an interchange flag per step.
template <typename Scalar>
struct ShiftedFactor {
  VectorX<Scalar> dl;   // multipliers
  VectorX<Scalar> d;    // pivots
  VectorX<Scalar> du;   // first superdiagonal of U
  VectorX<Scalar> du2;  // second superdiagonal fill-in
  std::vector<bool> swapped;
};

template <typename Scalar>
ShiftedFactor<Scalar> factor_shifted(const TridiagonalMatrix<Scalar>& t,
                                     Scalar lambda, Scalar pivmin) {
  using std::abs;
  const Eigen::Index n = t.dim();
  ShiftedFactor<Scalar> f;
  f.d = t.diag.array() - lambda;
  f.du.resize(n > 1 ? n - 1 : 0);
  f.dl.resize(n > 1 ? n - 1 : 0);
  f.du2 = VectorX<Scalar>::Zero(n > 2 ? n - 2 : 0);
  f.swapped.assign(n > 1 ? n - 1 : 0, false);
  if (n > 1) f.du = t.off;
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    const Scalar sub = t.off[i];
    if (abs(f.d[i]) >= abs(sub)) {
      if (abs(f.d[i]) < pivmin) {
        f.d[i] = f.d[i] < Scalar(0) ? -pivmin : pivmin;
      }
      const Scalar fact = sub / f.d[i];
      f.dl[i] = fact;
      f.d[i + 1] -= fact * f.du[i];
    } else {
      const Scalar fact = f.d[i] / sub;
      f.d[i] = sub;
      f.dl[i] = fact;
      const Scalar temp = f.du[i];
      f.du[i] = f.d[i + 1];
      f.d[i + 1] = temp - fact * f.d[i + 1];
      if (i + 2 < n) {
        f.du2[i] = f.du[i + 1];
        f.du[i + 1] = -fact * f.du[i + 1];
      }
      f.swapped[i] = true;
    }
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    if (abs(f.d[i]) < pivmin) {
      f.d[i] = f.d[i] < Scalar(0) ? -pivmin : pivmin;
    }
  }
  return f;
}

template <typename Scalar>
VectorX<Scalar> solve_shifted(const ShiftedFactor<Scalar>& f,
                              VectorX<Scalar> b) {
  const Eigen::Index n = f.d.size();
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    if (f.swapped[i]) {
      const Scalar temp = b[i];
      b[i] = b[i + 1];
      b[i + 1] = temp - f.dl[i] * b[i];
    } else {
      b[i + 1] -= f.dl[i] * b[i];
    }
  }
  b[n - 1] /= f.d[n - 1];
  if (n > 1) {
    b[n - 2] = (b[n - 2] - f.du[n - 2] * b[n - 1]) / f.d[n - 2];
  }
  for (Eigen::Index i = n - 3; i >= 0; --i) {
    b[i] = (b[i] - f.du[i] * b[i + 1] - f.du2[i] * b[i + 2]) / f.d[i];
  }
  return b;
}

}  // namespace detail

/// Number of eigenvalues strictly below sigma, by the sign count of the
/// shifted LDL^T pivot recurrence.
template <typename Scalar>
int eigenvalue_count_below(const TridiagonalMatrix<Scalar>& t, Scalar sigma) {
  using std::abs;
  const Eigen::Index n = t.dim();
  const Scalar pivmin = detail::pivot_floor(t);
  Scalar d(1);
  int count = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const Scalar e2 = i == 0 ? Scalar(0) : t.off[i - 1] * t.off[i - 1];
    d = t.diag[i] - sigma - e2 / d;
    if (abs(d) < pivmin) d = -pivmin;
    if (d < Scalar(0)) ++count;
  }
  return count;
}

/// Gershgorin enclosure of the spectrum.
template <typename Scalar>
std::pair<Scalar, Scalar> spectral_bounds(const TridiagonalMatrix<Scalar>& t) {
  using std::abs;
  const Eigen::Index n = t.dim();
  Scalar lo = t.diag[0];
  Scalar hi = t.diag[0];
  for (Eigen::Index i = 0; i < n; ++i) {
    Scalar r(0);
    if (i > 0) r += abs(t.off[i - 1]);
    if (i + 1 < n) r += abs(t.off[i]);
    lo = t.diag[i] - r < lo ? t.diag[i] - r : lo;
    hi = t.diag[i] + r > hi ? t.diag[i] + r : hi;
  }
  const Scalar eps = std::numeric_limits<Scalar>::epsilon();
  const Scalar pad = eps * (abs(lo) > abs(hi) ? abs(lo) : abs(hi)) +
                     Scalar(2) * detail::pivot_floor(t);
  return {lo - pad, hi + pad};
}

/// k smallest eigenvalues by Sturm bisection, ascending.
template <typename Scalar>
VectorX<Scalar> lowest_eigenvalues(const TridiagonalMatrix<Scalar>& t, int k) {
  using std::abs;
  const Eigen::Index n = t.dim();
  if (k < 1 || k > n) {
    throw ArgumentError("eigenvalue count must satisfy 1 <= k <= dim");
  }
  const Scalar eps = std::numeric_limits<Scalar>::epsilon();
  const Scalar pivmin = detail::pivot_floor(t);
  const auto [glo, ghi] = spectral_bounds(t);

  VectorX<Scalar> values(k);
  for (int j = 0; j < k; ++j) {
    Scalar a = j == 0 ? glo : values[j - 1];
    Scalar b = ghi;
    for (int iter = 0; iter < 250; ++iter) {
      const Scalar width = b - a;
      const Scalar stop =
          Scalar(2) * eps * (abs(a) > abs(b) ? abs(a) : abs(b)) +
          Scalar(2) * pivmin;
      if (!(width > stop)) break;
      const Scalar mid = (a + b) / Scalar(2);
      if (eigenvalue_count_below(t, mid) >= j + 1) {
        b = mid;
      } else {
        a = mid;
      }
    }
    values[j] = (a + b) / Scalar(2);
  }
  return values;
}

/// k smallest eigenpairs by Sturm bisection plus inverse iteration.
/// Eigenvectors are normalized to sum psi_i^2 h = 1, with the
/// largest-magnitude component made positive. Throws NumericalError if
/// inverse iteration cannot reach the residual contract in 50 sweeps.
template <typename Scalar>
EigenSolution<Scalar> lowest_eigenpairs(const TridiagonalMatrix<Scalar>& t,
                                        int k, Scalar h = Scalar(1)) {
  using std::abs;
  using std::sqrt;
  const Eigen::Index n = t.dim();
  if (k < 1 || k > n) {
    throw ArgumentError("eigenpair count must satisfy 1 <= k <= dim");
  }
  if (!(h > Scalar(0))) {
    throw ArgumentError("normalization weight must be positive");
  }
  const Scalar eps = std::numeric_limits<Scalar>::epsilon();
  const Scalar pivmin = detail::pivot_floor(t);
  const Scalar norm = norm_inf(t);

  EigenSolution<Scalar> sol;
  sol.eigenvalues = lowest_eigenvalues(t, k);
  sol.eigenvectors.resize(n, k);

  // Inverse iteration; vectors whose eigenvalues sit closer than ortol
  // are orthogonalized against each other to keep clusters resolvable.
  const Scalar ortol = norm / Scalar(1000);
  const Scalar target = Scalar(32) * eps * (norm > Scalar(1) ? norm : Scalar(1));
  const Scalar contract =
      Scalar(1e-8) * (norm > Scalar(1) ? norm : Scalar(1));
  for (int j = 0; j < k; ++j) {
    const Scalar lambda = sol.eigenvalues[j];
    const auto fact = detail::factor_shifted(t, lambda, pivmin);
    VectorX<Scalar> b = detail::start_vector<Scalar>(n, 7u * j + 1u);
    b /= b.norm();
    Scalar best_res = std::numeric_limits<Scalar>::max();
    VectorX<Scalar> best = b;
    for (int sweep = 0; sweep < 50; ++sweep) {
      VectorX<Scalar> x = detail::solve_shifted(fact, b);
      for (int i = j - 1; i >= 0; --i) {
        if (abs(sol.eigenvalues[i] - lambda) > ortol) break;
        x -= sol.eigenvectors.col(i).dot(x) * sol.eigenvectors.col(i);
      }
      const Scalar xn = x.norm();
      if (!(xn > Scalar(0)) || !std::isfinite(xn)) {
        b = detail::start_vector<Scalar>(n, 97u * j + 13u * sweep + 3u);
        b /= b.norm();
        continue;
      }
      x /= xn;
      const VectorX<Scalar> res = apply(t, x) - lambda * x;
      const Scalar rn = res.norm();
      if (rn < best_res) {
        best_res = rn;
        best = x;
      }
      if (rn <= target) break;
      b = x;
    }
    if (best_res > contract) {
      throw NumericalError("inverse iteration failed to converge for index " +
                               std::to_string(j),
                           static_cast<double>(best_res));
    }
    Eigen::Index imax = 0;
    best.cwiseAbs().maxCoeff(&imax);
    if (best[imax] < Scalar(0)) best = -best;
    sol.eigenvectors.col(j) = best;  // unit 2-norm until all columns exist
  }
  sol.eigenvectors /= sqrt(h);
  return sol;
}

}  // namespace pdmsusy
