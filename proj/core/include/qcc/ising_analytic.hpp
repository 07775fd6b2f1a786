#pragma once

#include <vector>

namespace qcc::ising {

/// Positive momenta k_m = (2m-1) pi / L, m = 1 .. L/2, for even L with
/// periodic boundary conditions.
std::vector<double> momenta(int nsites);

/// Bogoliubov angle theta_k = atan2(-J sin k, 1 + J cos k); the two-argument
/// form keeps theta continuous through 1 + J cos k = 0.
double theta(double coupling, double momentum);

/// d theta_k / dJ = -sin k / (1 + 2 J cos k + J^2).
double theta_deriv(double coupling, double momentum);

/// Momentum grid and angles for a chain of even length at coupling J.
struct BogoliubovSolution {
  int nsites = 0;
  std::vector<double> momenta;
  std::vector<double> thetas;
};
BogoliubovSolution solve(double coupling, int nsites);

/// |<psi(J_R)|psi(J_T)>| = prod_{k>0} |cos((theta_k^T - theta_k^R)/2)|.
double gs_overlap(double coupling_ref, double coupling_target, int nsites);

/// g_JJ = (1/4) sum_{k>0} (d theta_k / dJ)^2.
double metric_finite(double coupling, int nsites);

/// Thermodynamic-limit metric per site, lim_{L->inf} metric_finite / L.
/// Evaluated in complex arithmetic with the principal branch; throws if the
/// imaginary residue exceeds 1e-12 or at the |J| = 1 poles / J = 0.
double metric_thermo(double coupling);

/// C_FS = int sqrt(g_JJ) dJ by trapezoidal quadrature on a uniform grid of
/// step delta_j. nsites <= 0 selects the thermodynamic per-site metric
/// (grids crossing |J| = 1 are rejected in that mode); otherwise the total
/// finite-L metric is used, or the per-site one when per_site is set.
double cfs_path(double coupling_ref, double coupling_target, double delta_j,
                int nsites, bool per_site = false);

/// C_N = sum_{k>0} (theta_k^T - theta_k^R)^2.
double nielsen_angle_complexity(double coupling_ref, double coupling_target,
                                int nsites);

/// d C_N / dJ at the target: sum_{k>0} 2 (theta_k^T - theta_k^R) dtheta_k/dJ.
double nielsen_angle_derivative(double coupling_ref, double coupling_target,
                                int nsites);

/// Ground-state energy from the free-fermion solution:
/// E0 = -sum_{k>0} 2 sqrt(1 + 2 J cos k + J^2)  (h = 1 convention).
double ground_energy(double coupling, int nsites);

}  // namespace qcc::ising
