#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qcc/pauli.hpp"

namespace qcc::vqe {

/// Hardware-efficient layered ansatz on an open chain: per layer, L Ry
/// rotations, CZs on even bonds, L-2 Ry rotations (qubits 1..L-2), CZs on
/// odd bonds; a final column of L Ry rotations closes the circuit.
/// Parameter count: d * 2(L-1) + L.
struct AnsatzCircuit {
  int nsites = 2;
  int layers = 0;

  int parameter_count() const { return layers * 2 * (nsites - 1) + nsites; }
  int cz_per_layer() const { return nsites - 1; }
};

/// State after the full circuit from |00...0>.
StateVector apply_ansatz(const AnsatzCircuit& c,
                         const std::vector<double>& theta);

/// <theta|H|theta>.
double energy(const AnsatzCircuit& c, const std::vector<double>& theta,
              const PauliSum& h);

/// dE/dtheta for all parameters in one adjoint (reverse) sweep; values are
/// identical to the Ry parameter-shift rule.
std::vector<double> energy_gradient(const AnsatzCircuit& c,
                                    const std::vector<double>& theta,
                                    const PauliSum& h);

struct OptimizeOptions {
  int restarts = 8;
  std::uint64_t seed = 1;
  int max_iterations = 400;
  double gradient_tol = 1e-7;
  double init_scale = 0.1;  // initial angles uniform in [-scale, scale]
  std::optional<std::vector<double>> warm_start;
  double fidelity_threshold = 0.9;
};

struct VqeResult {
  std::vector<double> theta;
  double energy = 0.0;
  double fidelity = 0.0;            // vs exact ground state
  double subspace_fidelity = 0.0;   // vs span{GS, 1st excited}
  int layers = 0;
  double complexity = 0.0;
  bool converged = false;           // fidelity >= threshold
  double ground_energy = 0.0;
  double gap = 0.0;
};

/// Multi-start deterministic local minimization (L-BFGS with adjoint
/// gradients); the warm start, when present, is always one of the starts.
VqeResult optimize(const PauliSum& h, int layers, const OptimizeOptions& opts);

/// For each depth d = 1..d_max, optimize with a warm start padded from the
/// previous depth; report the smallest d whose ED fidelity clears the
/// threshold, or the best non-converged result (layers holds the depth used).
struct ConvergencePoint {
  double coupling = 0.0;
  VqeResult best;                 // converged result or best attempt
  std::vector<double> fidelity_by_depth;
};
ConvergencePoint depth_scan(const PauliSum& h, double coupling, int d_max,
                            const OptimizeOptions& opts);

/// Closed-form Nielsen cost of the circuit: sum over layers of
///   sqrt( sum_i (theta_i/2)^2 + 3(L-1)(pi/4)^2 ),
/// where the CZ budget counts each bond's standard three-rotation
/// decomposition. The final Ry column is excluded.
double circuit_complexity(const AnsatzCircuit& c,
                          const std::vector<double>& theta);

struct AfmDiagnostics {
  std::vector<double> sz_per_site;          // <sigma_z_i>
  std::vector<double> occupation_per_site;  // (1 - <sigma_z_i>)/2
  double magnetization_per_site = 0.0;
  double fidelity = 0.0;
  double subspace_fidelity = 0.0;
  double energy_accuracy = 0.0;  // 1 - |E - E0| / |E0|
};

AfmDiagnostics afm_diagnostics(const StateVector& psi, const PauliSum& h);

}  // namespace qcc::vqe
