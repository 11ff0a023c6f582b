#pragma once

#include <cmath>

namespace pdmsusy {

/// Truncated second-order jet: a value carried together with its first and
/// second derivatives with respect to a single independent variable.
/// Arithmetic propagates the derivatives through the chain rule, so
/// derivative values are exact up to roundoff (no finite-difference step).
template <typename Scalar>
struct Jet2 {
  Scalar value{};
  Scalar d1{};
  Scalar d2{};

  constexpr Jet2() = default;
  constexpr Jet2(Scalar v, Scalar first, Scalar second)
      : value(v), d1(first), d2(second) {}

  /// Seed for the independent variable: d/dx x = 1.
  static constexpr Jet2 variable(Scalar x) {
    return {x, Scalar(1), Scalar(0)};
  }

  static constexpr Jet2 constant(Scalar c) {
    return {c, Scalar(0), Scalar(0)};
  }

  constexpr Jet2 operator-() const { return {-value, -d1, -d2}; }
};

using Jet2d = Jet2<double>;

template <typename S>
constexpr Jet2<S> operator+(const Jet2<S>& a, const Jet2<S>& b) {
  return {a.value + b.value, a.d1 + b.d1, a.d2 + b.d2};
}

template <typename S>
constexpr Jet2<S> operator-(const Jet2<S>& a, const Jet2<S>& b) {
  return {a.value - b.value, a.d1 - b.d1, a.d2 - b.d2};
}

template <typename S>
constexpr Jet2<S> operator*(const Jet2<S>& a, const Jet2<S>& b) {
  return {a.value * b.value,
          a.d1 * b.value + a.value * b.d1,
          a.d2 * b.value + S(2) * a.d1 * b.d1 + a.value * b.d2};
}

/// Quotient rule via q = a/b, q' = (a' - q b')/b, q'' = (a'' - 2 q' b' - q b'')/b.
template <typename S>
constexpr Jet2<S> operator/(const Jet2<S>& a, const Jet2<S>& b) {
  const S q = a.value / b.value;
  const S q1 = (a.d1 - q * b.d1) / b.value;
  const S q2 = (a.d2 - S(2) * q1 * b.d1 - q * b.d2) / b.value;
  return {q, q1, q2};
}

template <typename S>
constexpr Jet2<S> operator+(const Jet2<S>& a, S c) {
  return {a.value + c, a.d1, a.d2};
}
template <typename S>
constexpr Jet2<S> operator+(S c, const Jet2<S>& a) {
  return {c + a.value, a.d1, a.d2};
}
template <typename S>
constexpr Jet2<S> operator-(const Jet2<S>& a, S c) {
  return {a.value - c, a.d1, a.d2};
}
template <typename S>
constexpr Jet2<S> operator-(S c, const Jet2<S>& a) {
  return {c - a.value, -a.d1, -a.d2};
}
template <typename S>
constexpr Jet2<S> operator*(const Jet2<S>& a, S c) {
  return {a.value * c, a.d1 * c, a.d2 * c};
}
template <typename S>
constexpr Jet2<S> operator*(S c, const Jet2<S>& a) {
  return {c * a.value, c * a.d1, c * a.d2};
}
template <typename S>
constexpr Jet2<S> operator/(const Jet2<S>& a, S c) {
  return {a.value / c, a.d1 / c, a.d2 / c};
}
template <typename S>
constexpr Jet2<S> operator/(S c, const Jet2<S>& a) {
  return Jet2<S>::constant(c) / a;
}

template <typename S>
Jet2<S> sqrt(const Jet2<S>& a) {
  using std::sqrt;
  const S r = sqrt(a.value);
  const S r1 = a.d1 / (S(2) * r);
  return {r, r1, (a.d2 / S(2) - r1 * r1) / r};
}

template <typename S>
Jet2<S> exp(const Jet2<S>& a) {
  using std::exp;
  const S e = exp(a.value);
  return {e, e * a.d1, e * (a.d2 + a.d1 * a.d1)};
}

template <typename S>
Jet2<S> log(const Jet2<S>& a) {
  using std::log;
  const S l1 = a.d1 / a.value;
  return {log(a.value), l1, a.d2 / a.value - l1 * l1};
}

/// Real power with constant exponent.
template <typename S>
Jet2<S> pow(const Jet2<S>& a, S p) {
  using std::pow;
  const S v = pow(a.value, p);
  const S v1 = p * pow(a.value, p - S(1));
  const S v2 = p * (p - S(1)) * pow(a.value, p - S(2));
  return {v, v1 * a.d1, v2 * a.d1 * a.d1 + v1 * a.d2};
}

}  // namespace pdmsusy
