#pragma once

#include <utility>

#include "pdmsusy/families.hpp"
#include "pdmsusy/grid.hpp"
#include "pdmsusy/mass.hpp"
#include "pdmsusy/susy.hpp"
#include "pdmsusy/tridiagonal.hpp"

namespace pdmsusy {

/// Discrete lowering operator on the staggered grid: row i evaluates
///   (1/sqrt2) m^{e/2}(x_{i+1/2}) [f_{i+1} psi_{i+1} - f_i psi_i]/h
///   + (W/sqrt(2m))(x_{i+1/2}) (psi_i + psi_{i+1})/2
/// with f = m^{-(e+1)/2} at nodes. The raising operator is its exact
/// transpose, applied via apply_transpose.
BidiagonalOperator<double> assemble_ladder(const PotentialFamily& family,
                                           const MassProfile& mass,
                                           const OrderingParams& ord,
                                           const DiscretizationGrid& grid);

/// (H_minus, H_plus) = (A^T A on the n nodes, A A^T on the n-1 midpoints);
/// symmetric tridiagonal Gram matrices of the lowering operator.
std::pair<TridiagonalMatrix<double>, TridiagonalMatrix<double>>
hamiltonians_factorized(const BidiagonalOperator<double>& a_minus);

/// Flux-form discretization of -1/2 f d/dx(g d/dx(f psi)) + V psi with
/// f = m^{-(e+1)/2} at nodes and g = m^e at cell faces (Dirichlet ends).
TridiagonalMatrix<double> hamiltonian_direct(
    const MassProfile& mass, const OrderingParams& ord,
    const VectorX<double>& potential_nodes, const DiscretizationGrid& grid);

/// Applies the expanded kinetic form
///   -(1/2m) psi'' + (m'/2m^2) psi' + (U(eta, e) + V) psi
/// with centered differences and Dirichlet ends; the non-symmetric
/// counterpart used for discretization-equivalence probes.
VectorX<double> apply_expanded_hamiltonian(const MassProfile& mass,
                                           double eta, double epsilon,
                                           const VectorX<double>& potential_nodes,
                                           const DiscretizationGrid& grid,
                                           const VectorX<double>& psi);

}  // namespace pdmsusy
