#pragma once

#include <vector>

#include "qcc/pauli.hpp"

namespace qcc {

/// One first-order Trotter step: psi <- prod_g exp(-i dt H_g) psi.
/// Each group must be internally commuting; every term P satisfies P^2 = I,
/// so exp(-i theta P) psi = cos(theta) psi - i sin(theta) P psi is applied
/// term by term, which is exact within a commuting group.
StateVector trotter_step(const std::vector<PauliSum>& groups, double dt,
                         const StateVector& psi);

/// exp(-i dt H) psi for a single commuting PauliSum.
StateVector exp_apply(const PauliSum& h, double dt, const StateVector& psi);

}  // namespace qcc
