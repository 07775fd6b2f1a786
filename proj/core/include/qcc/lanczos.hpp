#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcc/pauli.hpp"

namespace qcc {

struct Eigenpair {
  double energy = 0.0;
  StateVector vector;
};

struct LanczosOptions {
  int max_iter = 500;
  double tol = 1e-10;          // residual norm per requested Ritz pair
  StateVector seed;            // optional warm start; deterministic default otherwise
  double degeneracy_rtol = 1e-10;
};

struct LanczosResult {
  std::vector<Eigenpair> pairs;   // ascending energies, orthonormal vectors
  bool converged = false;
  int iterations = 0;
  double max_residual = 0.0;
  bool degenerate_ground = false; // E1 - E0 < degeneracy_rtol * |E0|
};

using LinearOp = std::function<StateVector(const StateVector&)>;

/// Lanczos with full reorthogonalization. Deterministic given the seed;
/// without one, a fixed internal start vector is used. Throws on
/// non-convergence with the residual in the message.
LanczosResult lowest_eigenpairs(const LinearOp& op, Eigen::Index dim, int k,
                                const LanczosOptions& opts = {});

/// Convenience overload for Pauli-sum Hamiltonians.
LanczosResult lowest_eigenpairs(const PauliSum& h, int k,
                                const LanczosOptions& opts = {});

/// Deterministic default start vector used when no seed is given.
StateVector lanczos_default_seed(Eigen::Index dim);

}  // namespace qcc
