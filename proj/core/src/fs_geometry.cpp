#include "qcc/fs_geometry.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qcc {

double fidelity(const StateVector& psi, const StateVector& phi) {
  if (psi.size() != phi.size())
    throw std::invalid_argument("fidelity: dimension mismatch");
  return std::norm(psi.dot(phi));
}

double fidelity_per_site(const StateVector& psi, const StateVector& phi,
                         int nsites) {
  if (nsites < 1) throw std::invalid_argument("fidelity_per_site: N < 1");
  const double f = fidelity(psi, phi);
  if (f == 0.0) return -std::numeric_limits<double>::infinity();
  return std::log(f) / nsites;
}

MetricSample chi_fd(const ParamPath& path, double lambda,
                    double delta_lambda) {
  if (delta_lambda <= 0) throw std::invalid_argument("chi_fd: delta <= 0");
  if (!path.ground_state_provider)
    throw std::invalid_argument("chi_fd: missing provider");

  auto estimate = [&](double d) {
    const StateVector lo = path.ground_state_provider(lambda - 0.5 * d);
    const StateVector hi = path.ground_state_provider(lambda + 0.5 * d);
    const double f = fidelity(lo, hi);
    if (f < 0.5)
      throw std::runtime_error("chi_fd: step fidelity < 0.5 (branch switch?)");
    return (1.0 - f) / (d * d);
  };

  const double g1 = estimate(delta_lambda);
  const double g2 = estimate(0.5 * delta_lambda);
  // 1 - F = g d^2 + O(d^4), so the d^2 estimate has an O(d^2) error term.
  const double g0 = (4.0 * g2 - g1) / 3.0;

  MetricSample s;
  s.lambda = lambda;
  s.g = g0;
  s.method = MetricMethod::FiniteDifferenceFidelity;
  s.error_estimate = std::abs(g0 - g2);
  if (s.g < -1e-10)
    throw std::runtime_error("chi_fd: negative metric beyond tolerance");
  if (s.g < 0) s.g = 0;
  return s;
}

double metric_fluctuation(const StateVector& psi, const PauliSum& o_mu,
                          const PauliSum& o_nu) {
  const StateVector mu_psi = apply(o_mu, psi);
  const StateVector nu_psi = apply(o_nu, psi);
  const double sym = mu_psi.dot(nu_psi).real();  // (1/2)<{O_mu,O_nu}>
  const double em = psi.dot(mu_psi).real();
  const double en = psi.dot(nu_psi).real();
  return sym - em * en;
}

double cfs_integral(const std::vector<MetricSample>& samples) {
  const auto cum = cfs_cumulative(samples);
  return cum.empty() ? 0.0 : cum.back();
}

std::vector<double> cfs_cumulative(const std::vector<MetricSample>& samples) {
  std::vector<double> cum(samples.size(), 0.0);
  auto speed = [](const MetricSample& s) {
    if (s.g < -1e-10)
      throw std::invalid_argument("cfs_integral: negative metric");
    return std::sqrt(std::max(0.0, s.g));
  };
  for (std::size_t i = 1; i < samples.size(); ++i) {
    const double dl = samples[i].lambda - samples[i - 1].lambda;
    if (dl <= 0)
      throw std::invalid_argument("cfs_integral: grid not increasing");
    cum[i] = cum[i - 1] + 0.5 * (speed(samples[i - 1]) + speed(samples[i])) * dl;
  }
  return cum;
}

ExponentRelation exponent_relation(double delta_mu, double delta_nu, double z,
                                   int dims) {
  ExponentRelation r;
  r.delta_munu = delta_mu + delta_nu - 2.0 * z - dims;
  if (r.delta_munu > -2.0) r.cls = Extensivity::Subextensive;
  else if (r.delta_munu == -2.0) r.cls = Extensivity::Extensive;
  else r.cls = Extensivity::Superextensive;
  return r;
}

std::string to_string(Extensivity e) {
  switch (e) {
    case Extensivity::Subextensive: return "subextensive";
    case Extensivity::Extensive: return "extensive";
    case Extensivity::Superextensive: return "superextensive";
  }
  return "?";
}

}  // namespace qcc
