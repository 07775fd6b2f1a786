#pragma once

#include <vector>

#include "qcc/pauli.hpp"

namespace qcc {

struct CostWeights {
  double penalty = 1.0;  // p, weighting >bodycut-body terms
  int bodycut = 2;
};

/// Per-step Hamiltonian coefficients: each entry is (coefficient, weight
/// class) where the weight is the number of non-identity sites in the term.
struct CoefficientSnapshot {
  std::vector<std::pair<double, int>> entries;
};

/// Discrete Nielsen cost: sum over steps of
///   deltaT * sqrt(T/deltaT) * sqrt(sum' h^2 + p^2 sum'' h^2),
/// where sum' runs over terms of weight <= bodycut and sum'' over the rest.
double nielsen_cost(const std::vector<CoefficientSnapshot>& snapshots,
                    double delta_t, double total_t,
                    const CostWeights& w = {});

}  // namespace qcc
