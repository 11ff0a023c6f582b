#pragma once

#include "pdmsusy/errors.hpp"

namespace pdmsusy {

/// Uniform Dirichlet grid on [x_min, x_max]: n interior nodes at
/// x_min + (i+1) h, i = 0..n-1, with h = (x_max - x_min)/(n+1). The
/// endpoints are never nodes; the wavefunction is implicitly zero there.
struct DiscretizationGrid {
  double x_min;
  double x_max;
  int n;
  double h;

  double node(int i) const { return x_min + (static_cast<double>(i) + 1.0) * h; }

  /// Midpoint between nodes i and i+1, i = 0..n-2.
  double midpoint(int i) const {
    return x_min + (static_cast<double>(i) + 1.5) * h;
  }

  /// Cell face i = 0..n: face(0) = x_min + h/2 and face(n) = x_max - h/2
  /// bracket the node range; face(i+1) coincides with midpoint(i).
  double face(int i) const {
    return x_min + (static_cast<double>(i) + 0.5) * h;
  }
};

inline DiscretizationGrid build_grid(double x_min, double x_max, int n) {
  if (!(x_min < x_max)) {
    throw ArgumentError("grid requires x_min < x_max");
  }
  if (n < 3) {
    throw ArgumentError("grid requires at least 3 interior nodes");
  }
  return {x_min, x_max, n, (x_max - x_min) / (n + 1.0)};
}

}  // namespace pdmsusy
