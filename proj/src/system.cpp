#include "pdmsusy/system.hpp"

namespace pdmsusy {

DiscreteSystem build_system(const PotentialFamily& family,
                            const MassProfile& mass,
                            const OrderingParams& ord,
                            const DiscretizationGrid& grid) {
  DiscreteSystem sys;
  sys.grid = grid;
  sys.a_minus = assemble_ladder(family, mass, ord, grid);
  auto pair = hamiltonians_factorized(sys.a_minus);
  sys.h_minus = std::move(pair.first);
  sys.h_plus = std::move(pair.second);
  VectorX<double> v(grid.n);
  for (int i = 0; i < grid.n; ++i) {
    v[i] = partner_potentials(family, mass, ord, grid.node(i)).v_minus;
  }
  sys.h_direct = hamiltonian_direct(mass, ord, v, grid);
  return sys;
}

VectorX<double> sample_ground_state(const PotentialFamily& family,
                                    const MassProfile& mass,
                                    const OrderingParams& ord,
                                    const DiscretizationGrid& grid) {
  VectorX<double> psi(grid.n);
  for (int i = 0; i < grid.n; ++i) {
    psi[i] = ground_state(family, mass, ord, grid.node(i));
  }
  return psi;
}

}  // namespace pdmsusy
