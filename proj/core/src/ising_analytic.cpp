#include "qcc/ising_analytic.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace qcc::ising {

namespace {
constexpr double kPi = std::numbers::pi;

void check_even(int nsites) {
  if (nsites < 2 || nsites % 2 != 0)
    throw std::invalid_argument("ising: L must be even and >= 2");
}
}  // namespace

std::vector<double> momenta(int nsites) {
  check_even(nsites);
  std::vector<double> ks(nsites / 2);
  for (int m = 1; m <= nsites / 2; ++m)
    ks[m - 1] = (2.0 * m - 1.0) * kPi / nsites;
  return ks;
}

double theta(double coupling, double momentum) {
  return std::atan2(-coupling * std::sin(momentum),
                    1.0 + coupling * std::cos(momentum));
}

double theta_deriv(double coupling, double momentum) {
  return -std::sin(momentum) /
         (1.0 + 2.0 * coupling * std::cos(momentum) + coupling * coupling);
}

BogoliubovSolution solve(double coupling, int nsites) {
  BogoliubovSolution sol;
  sol.nsites = nsites;
  sol.momenta = momenta(nsites);
  sol.thetas.reserve(sol.momenta.size());
  for (double k : sol.momenta) sol.thetas.push_back(theta(coupling, k));
  return sol;
}

double gs_overlap(double coupling_ref, double coupling_target, int nsites) {
  double f = 1.0;
  for (double k : momenta(nsites)) {
    const double dth = theta(coupling_target, k) - theta(coupling_ref, k);
    f *= std::abs(std::cos(0.5 * dth));
  }
  return f;
}

double metric_finite(double coupling, int nsites) {
  double g = 0.0;
  for (double k : momenta(nsites)) {
    const double d = theta_deriv(coupling, k);
    g += d * d;
  }
  return 0.25 * g;
}

double metric_thermo(double coupling) {
  const double aj = std::abs(coupling);
  if (std::abs(aj - 1.0) < 1e-12)
    throw std::domain_error("metric_thermo: pole at |J| = 1");
  if (aj < 1e-12)
    throw std::domain_error("metric_thermo: removable point J = 0, use limit 1/16");
  using C = std::complex<double>;
  const C j(coupling, 0.0);
  const C i(0.0, 1.0);
  const C j2 = j * j;
  // Closed form of the k-integral; the printed form carries the sum
  // convention sum_k -> (N/pi) int, i.e. pi times the per-site limit of the
  // positive-k sum, hence the final 1/pi.
  const C num = -kPi * (j2 - 1.0) +
                i * (j2 + 1.0) *
                    (std::log(-2.0 * i * (j + 1.0) / (j - 1.0)) -
                     std::log(2.0 * i * (j + 1.0) / (j - 1.0)));
  const C g = num / (32.0 * j2 * (j2 - 1.0)) / kPi;
  if (std::abs(g.imag()) > 1e-12)
    throw std::runtime_error("metric_thermo: imaginary residue too large");
  return g.real();
}

double cfs_path(double coupling_ref, double coupling_target, double delta_j,
                int nsites, bool per_site) {
  if (delta_j <= 0) throw std::invalid_argument("cfs_path: deltaJ <= 0");
  if (coupling_ref == coupling_target) return 0.0;
  const double a = std::min(coupling_ref, coupling_target);
  const double b = std::max(coupling_ref, coupling_target);
  const bool thermo = nsites <= 0;
  if (thermo) {
    for (double c : {-1.0, 1.0})
      if (a < c && b > c)
        throw std::domain_error("cfs_path: thermodynamic grid crosses |J| = 1");
  }
  const int n = std::max(1, static_cast<int>(std::ceil((b - a) / delta_j)));
  const double h = (b - a) / n;
  auto speed = [&](double j) {
    double g = thermo ? metric_thermo(j) : metric_finite(j, nsites);
    if (!thermo && per_site) g /= nsites;
    return std::sqrt(std::max(0.0, g));
  };
  double acc = 0.5 * (speed(a) + speed(b));
  for (int m = 1; m < n; ++m) acc += speed(a + m * h);
  return acc * h;
}

double nielsen_angle_complexity(double coupling_ref, double coupling_target,
                                int nsites) {
  double c = 0.0;
  for (double k : momenta(nsites)) {
    const double dth = theta(coupling_target, k) - theta(coupling_ref, k);
    c += dth * dth;
  }
  return c;
}

double nielsen_angle_derivative(double coupling_ref, double coupling_target,
                                int nsites) {
  double d = 0.0;
  for (double k : momenta(nsites)) {
    const double dth = theta(coupling_target, k) - theta(coupling_ref, k);
    d += 2.0 * dth * theta_deriv(coupling_target, k);
  }
  return d;
}

double ground_energy(double coupling, int nsites) {
  double e = 0.0;
  for (double k : momenta(nsites))
    e -= 2.0 * std::sqrt(1.0 + 2.0 * coupling * std::cos(k) +
                         coupling * coupling);
  return e;
}

}  // namespace qcc::ising
