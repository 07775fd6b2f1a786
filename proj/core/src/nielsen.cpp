#include "qcc/nielsen.hpp"

#include <cmath>
#include <stdexcept>

namespace qcc {

double nielsen_cost(const std::vector<CoefficientSnapshot>& snapshots,
                    double delta_t, double total_t, const CostWeights& w) {
  if (delta_t <= 0) throw std::invalid_argument("nielsen_cost: deltaT <= 0");
  if (snapshots.empty()) throw std::invalid_argument("nielsen_cost: no snapshots");
  if (w.penalty < 0) throw std::invalid_argument("nielsen_cost: p < 0");
  const double depth = std::sqrt(total_t / delta_t);
  double total = 0.0;
  for (const auto& snap : snapshots) {
    double local = 0.0, penalized = 0.0;
    for (const auto& [h, weight] : snap.entries) {
      if (weight <= w.bodycut) local += h * h;
      else penalized += h * h;
    }
    total += delta_t * depth * std::sqrt(local + w.penalty * w.penalty * penalized);
  }
  return total;
}

}  // namespace qcc
