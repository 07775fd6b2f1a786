#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qcc/pauli.hpp"

namespace qcc {

enum class MetricMethod { FiniteDifferenceFidelity, Fluctuation, Analytic };

struct MetricSample {
  double lambda = 0.0;
  double g = 0.0;
  MetricMethod method = MetricMethod::FiniteDifferenceFidelity;
  bool per_site = false;
  double error_estimate = 0.0;
};

/// Deterministic ground-state provider over a monotone parameter grid.
struct ParamPath {
  std::vector<double> grid;
  std::function<StateVector(double)> ground_state_provider;
};

/// Squared overlap |<psi|phi>|^2, the pure-state fidelity.
double fidelity(const StateVector& psi, const StateVector& phi);

/// (1/N) log F; -infinity when F == 0.
double fidelity_per_site(const StateVector& psi, const StateVector& phi,
                         int nsites);

/// Central fidelity-susceptibility estimate
///   g(lambda) = (1 - F(lambda - d/2, lambda + d/2)) / d^2
/// with one Richardson level over d and d/2; the returned error estimate is
/// the difference between the extrapolated and finest values. A step
/// fidelity below 0.5 is treated as a branch switch and rejected.
MetricSample chi_fd(const ParamPath& path, double lambda, double delta_lambda);

/// (1/2) <{O_mu, O_nu}> - <O_mu><O_nu> on a normalized state.
double metric_fluctuation(const StateVector& psi, const PauliSum& o_mu,
                          const PauliSum& o_nu);

/// Trapezoidal int sqrt(g) dlambda over the sample grid. Negative g beyond
/// -1e-10 is an error; small negatives are clamped to zero.
double cfs_integral(const std::vector<MetricSample>& samples);

/// Cumulative C_FS at each grid point (same quadrature).
std::vector<double> cfs_cumulative(const std::vector<MetricSample>& samples);

enum class Extensivity { Subextensive, Extensive, Superextensive };

/// Delta_munu = Delta_nu + Delta_mu - 2z - d, with the extensivity class of
/// the complexity derivative (threshold at -2).
struct ExponentRelation {
  double delta_munu = 0.0;
  Extensivity cls = Extensivity::Subextensive;
};
ExponentRelation exponent_relation(double delta_mu, double delta_nu, double z,
                                   int dims);

std::string to_string(Extensivity e);

}  // namespace qcc
