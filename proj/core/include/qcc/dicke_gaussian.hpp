#pragma once

#include <Eigen/Dense>
#include <vector>

#include "qcc/fs_geometry.hpp"

namespace qcc::dicke {

enum class Phase { Normal, Superradiant };

/// Effective two-mode quadratic Hamiltonian in the thermodynamic limit,
/// written as H = w_a a^dag a + w_b b^dag b + c_ab (a^dag+a)(b^dag+b)
///             + c_bb (b^dag+b)^2.
/// In real-space coordinates this is (1/2) p^T p + (1/2) R^T V R with
///   V = [[w_a^2, 2 c_ab sqrt(w_a w_b)], [., w_b (w_b + 4 c_bb)]].
struct QuadraticBosonHam {
  Phase phase = Phase::Normal;
  double omega_a = 0.0, omega_b = 0.0;
  double c_ab = 0.0, c_bb = 0.0;
  double omega_cavity = 0.0, omega_spin = 0.0, coupling = 0.0;

  Eigen::Matrix2d potential() const;
};

/// Two-mode Gaussian ground-state data: psi ~ exp(-(R, A R)/2) with
/// A = U^T diag(eps_-, eps_+) U, eps_- <= eps_+.
struct GaussianGroundState {
  double eps_minus = 0.0, eps_plus = 0.0;
  Eigen::Matrix2d rotation;   // U, orthogonal
  Eigen::Matrix2d quad_form;  // A, symmetric positive-definite
};

/// lambda_c = sqrt(w_c w_s) / 2 (where the soft normal mode vanishes).
double critical_coupling(double omega_cavity, double omega_spin);

/// Phase selected by lambda vs lambda_c; throws exactly at lambda_c.
QuadraticBosonHam effective_ham(double omega_cavity, double omega_spin,
                                double coupling);

/// Normal-mode decomposition; throws "outside phase domain" when a squared
/// eigenmode is non-positive.
GaussianGroundState eigenmodes(const QuadraticBosonHam& h);

/// 2 [det A det A']^{1/4} / det(A + A')^{1/2}, both forms in the common
/// real-space frame. Displacement sectors are not compared; callers must
/// stay within one phase.
double gaussian_overlap(const GaussianGroundState& g,
                        const GaussianGroundState& gp);

/// Per-grid-point metric from gaussian_overlap finite differences (same
/// contract as chi_fd). The grid must avoid lambda_c by at least delta.
std::vector<MetricSample> dicke_metric_thermo(const std::vector<double>& grid,
                                              double omega_cavity,
                                              double omega_spin, double delta);

}  // namespace qcc::dicke
