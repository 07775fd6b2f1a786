#pragma once

#include <optional>
#include <vector>

#include "qcc/models.hpp"
#include "qcc/nielsen.hpp"
#include "qcc/pauli.hpp"

namespace qcc::adiabatic {

/// lambda(t) = sin^2[(pi/2) sin^2(pi t / 2T)] with lambda(0)=0, lambda(T)=1
/// and vanishing endpoint velocity. deltaT = min(0.1, T/30).
struct Schedule {
  double total_time = 1.0;

  double lambda(double t) const;
  double lambda_dot(double t) const;
  double step() const;  // min(0.1, T/30)
};

enum class ProtocolModel { Tfi, Zzxz };
enum class TfiRamp { RampCoupling, RampField };

struct ProtocolParams {
  ProtocolModel model = ProtocolModel::Tfi;
  int nsites = 12;
  double coupling = 1.0;   // target J
  double field_x = 1.0;
  double field_z = 0.75;   // ZZXZ only
  bool with_cd = false;
  TfiRamp ramp = TfiRamp::RampCoupling;  // appendix path: ramp the field
  int diag_stride = 1;     // instantaneous GS/gap every this many steps
};

/// Variational counter-diabatic coefficients at l=1: least-squares solve of
/// M c = b with M_ab = <K_a, K_b>, b_a = <dH, K_a>, K_a = i[H, B_a], all
/// inner products Tr(..)/2^L in Pauli algebra. Singular systems fall back to
/// a pseudo-inverse (flagged).
struct CdSolution {
  std::vector<double> coefficients;
  bool used_pseudoinverse = false;
};
CdSolution cd_coefficients(const PauliSum& h, const PauliSum& dh,
                           const std::vector<PauliSum>& basis);

/// The l=1 CD operator families for each protocol (all <= 2-body).
std::vector<PauliSum> cd_basis_tfi(int nsites);
std::vector<PauliSum> cd_basis_zzxz(int nsites);

struct EvolutionTrace {
  std::vector<double> times;
  std::vector<double> lambdas;
  std::vector<double> fidelity_instantaneous;
  std::vector<double> gaps;
  std::vector<CoefficientSnapshot> snapshots;
  double final_fidelity = 0.0;
  double nielsen_complexity = 0.0;
  double total_time = 0.0;
  double step = 0.0;
};

/// Trotterized sweep from the ground state of H0 to the target, recording
/// per-step coefficients, fidelity to the instantaneous ground state and the
/// gap. Hamiltonian and CD coefficients are evaluated at step midpoints.
EvolutionTrace evolve(const ProtocolParams& p, double total_time);

struct MinimalTimeResult {
  bool reached = false;
  double minimal_time = 0.0;
  double complexity_at_minimal = 0.0;
  double best_fidelity = 0.0;
  std::vector<double> times_scanned;
  std::vector<double> final_fidelities;
  std::vector<double> complexities;
};

/// Smallest grid T with final fidelity >= threshold; C_N from that trace.
MinimalTimeResult minimal_time_scan(const ProtocolParams& p,
                                    const std::vector<double>& t_grid,
                                    double fidelity_threshold = 0.9);

}  // namespace qcc::adiabatic
