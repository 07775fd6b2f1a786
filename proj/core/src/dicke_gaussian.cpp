#include "qcc/dicke_gaussian.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

namespace qcc::dicke {

Eigen::Matrix2d QuadraticBosonHam::potential() const {
  Eigen::Matrix2d v;
  v(0, 0) = omega_a * omega_a;
  v(0, 1) = v(1, 0) = 2.0 * c_ab * std::sqrt(omega_a * omega_b);
  v(1, 1) = omega_b * (omega_b + 4.0 * c_bb);
  return v;
}

double critical_coupling(double omega_cavity, double omega_spin) {
  return 0.5 * std::sqrt(omega_cavity * omega_spin);
}

QuadraticBosonHam effective_ham(double omega_cavity, double omega_spin,
                                double coupling) {
  if (omega_cavity <= 0 || omega_spin <= 0)
    throw std::invalid_argument("effective_ham: frequencies must be > 0");
  const double lc = critical_coupling(omega_cavity, omega_spin);
  QuadraticBosonHam h;
  h.omega_cavity = omega_cavity;
  h.omega_spin = omega_spin;
  h.coupling = coupling;
  if (std::abs(coupling - lc) < 1e-14)
    throw std::domain_error("effective_ham: both phases degenerate at lambda_c");
  if (std::abs(coupling) < lc) {
    h.phase = Phase::Normal;
    h.omega_a = omega_cavity;
    h.omega_b = omega_spin;
    h.c_ab = coupling;
    h.c_bb = 0.0;
  } else {
    // mu = w_s w_c / (4 lambda^2) < 1 in the superradiant phase.
    const double mu =
        omega_spin * omega_cavity / (4.0 * coupling * coupling);
    h.phase = Phase::Superradiant;
    h.omega_a = omega_cavity;
    h.omega_b = omega_spin * (1.0 + mu) / (2.0 * mu);
    h.c_bb = omega_spin * (1.0 - mu) * (3.0 + mu) / (8.0 * mu * (1.0 + mu));
    h.c_ab = coupling * mu * std::sqrt(2.0 / (1.0 + mu));
  }
  return h;
}

GaussianGroundState eigenmodes(const QuadraticBosonHam& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(h.potential());
  const Eigen::Vector2d ev2 = es.eigenvalues();  // ascending
  if (ev2[0] <= 0)
    throw std::domain_error("eigenmodes: outside phase domain (eps^2 <= 0)");
  GaussianGroundState g;
  g.eps_minus = std::sqrt(ev2[0]);
  g.eps_plus = std::sqrt(ev2[1]);
  // Columns of the eigenvector matrix are the normal modes; A = sqrt(V).
  g.rotation = es.eigenvectors().transpose();  // U with rows = modes
  Eigen::Matrix2d m = Eigen::Matrix2d::Zero();
  m(0, 0) = g.eps_minus;
  m(1, 1) = g.eps_plus;
  g.quad_form = g.rotation.transpose() * m * g.rotation;
  return g;
}

double gaussian_overlap(const GaussianGroundState& g,
                        const GaussianGroundState& gp) {
  const Eigen::Matrix2d& a = g.quad_form;
  const Eigen::Matrix2d& ap = gp.quad_form;
  const double da = a.determinant(), dap = ap.determinant();
  if (da <= 0 || dap <= 0)
    throw std::invalid_argument("gaussian_overlap: indefinite quadratic form");
  const double ds = (a + ap).determinant();
  return 2.0 * std::pow(da * dap, 0.25) / std::sqrt(ds);
}

std::vector<MetricSample> dicke_metric_thermo(const std::vector<double>& grid,
                                              double omega_cavity,
                                              double omega_spin,
                                              double delta) {
  if (delta <= 0) throw std::invalid_argument("dicke_metric_thermo: delta <= 0");
  const double lc = critical_coupling(omega_cavity, omega_spin);
  std::vector<MetricSample> out;
  out.reserve(grid.size());
  for (double lam : grid) {
    if (std::abs(lam - lc) < delta)
      throw std::domain_error("dicke_metric_thermo: grid point crosses lambda_c");
    auto state_at = [&](double l) {
      return eigenmodes(effective_ham(omega_cavity, omega_spin, l));
    };
    auto estimate = [&](double d) {
      const double f =
          gaussian_overlap(state_at(lam - 0.5 * d), state_at(lam + 0.5 * d));
      return (1.0 - f * f) / (d * d);
    };
    const double g1 = estimate(delta);
    const double g2 = estimate(0.5 * delta);
    MetricSample s;
    s.lambda = lam;
    s.g = (4.0 * g2 - g1) / 3.0;
    s.method = MetricMethod::FiniteDifferenceFidelity;
    s.error_estimate = std::abs(s.g - g2);
    if (s.g < 0) s.g = 0;
    out.push_back(s);
  }
  return out;
}

}  // namespace qcc::dicke
