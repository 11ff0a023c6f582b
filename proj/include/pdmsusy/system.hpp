#pragma once

#include "pdmsusy/operators.hpp"

namespace pdmsusy {

/// Everything the discrete problem needs: the grid, the lowering
/// operator, both factorized partners, and the independent flux-form
/// discretization carrying the sampled V_minus.
struct DiscreteSystem {
  DiscretizationGrid grid;
  BidiagonalOperator<double> a_minus;
  TridiagonalMatrix<double> h_minus;
  TridiagonalMatrix<double> h_plus;
  TridiagonalMatrix<double> h_direct;
};

DiscreteSystem build_system(const PotentialFamily& family,
                            const MassProfile& mass,
                            const OrderingParams& ord,
                            const DiscretizationGrid& grid);

/// Closed-form ground state sampled at the grid nodes (unnormalized).
VectorX<double> sample_ground_state(const PotentialFamily& family,
                                    const MassProfile& mass,
                                    const OrderingParams& ord,
                                    const DiscretizationGrid& grid);

}  // namespace pdmsusy
