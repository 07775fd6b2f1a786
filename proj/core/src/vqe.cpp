#include "qcc/vqe.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "qcc/lanczos.hpp"

namespace qcc::vqe {

namespace {

struct Gate {
  enum class Kind { Ry, Cz } kind;
  int q0 = 0, q1 = 0;   // Cz acts on (q0, q1); Ry on q0
  int param = -1;       // index into theta for Ry
};

std::vector<Gate> gate_list(const AnsatzCircuit& c) {
  std::vector<Gate> gates;
  const int l = c.nsites;
  int p = 0;
  for (int d = 0; d < c.layers; ++d) {
    for (int q = 0; q < l; ++q)
      gates.push_back({Gate::Kind::Ry, q, 0, p++});
    for (int i = 0; i + 1 < l; i += 2)
      gates.push_back({Gate::Kind::Cz, i, i + 1, -1});
    for (int q = 1; q + 1 < l; ++q)
      gates.push_back({Gate::Kind::Ry, q, 0, p++});
    for (int i = 1; i + 1 < l; i += 2)
      gates.push_back({Gate::Kind::Cz, i, i + 1, -1});
  }
  for (int q = 0; q < l; ++q)
    gates.push_back({Gate::Kind::Ry, q, 0, p++});
  return gates;
}

void apply_ry(StateVector& psi, int q, double theta) {
  const double c = std::cos(0.5 * theta), s = std::sin(0.5 * theta);
  const std::int64_t dim = psi.size(), bit = std::int64_t{1} << q;
  for (std::int64_t b = 0; b < dim; ++b) {
    if (b & bit) continue;
    const Complex a0 = psi[b], a1 = psi[b | bit];
    psi[b] = c * a0 - s * a1;
    psi[b | bit] = s * a0 + c * a1;
  }
}

void apply_cz(StateVector& psi, int q0, int q1) {
  const std::int64_t dim = psi.size();
  const std::int64_t mask = (std::int64_t{1} << q0) | (std::int64_t{1} << q1);
  for (std::int64_t b = 0; b < dim; ++b)
    if ((b & mask) == mask) psi[b] = -psi[b];
}

// 2 Re <lam| dRy/dtheta |psi_pre> on qubit q.
double ry_grad_overlap(const StateVector& lam, const StateVector& psi, int q,
                       double theta) {
  const double c = std::cos(0.5 * theta), s = std::sin(0.5 * theta);
  const std::int64_t dim = psi.size(), bit = std::int64_t{1} << q;
  double acc = 0.0;
  for (std::int64_t b = 0; b < dim; ++b) {
    if (b & bit) continue;
    const Complex a0 = psi[b], a1 = psi[b | bit];
    const Complex d0 = 0.5 * (-s * a0 - c * a1);
    const Complex d1 = 0.5 * (c * a0 - s * a1);
    acc += (std::conj(lam[b]) * d0 + std::conj(lam[b | bit]) * d1).real();
  }
  return 2.0 * acc;
}

void check_theta(const AnsatzCircuit& c, const std::vector<double>& theta) {
  if (static_cast<int>(theta.size()) != c.parameter_count())
    throw std::invalid_argument("vqe: parameter count mismatch");
  if (c.nsites < 2) throw std::invalid_argument("vqe: L < 2");
}

}  // namespace

StateVector apply_ansatz(const AnsatzCircuit& c,
                         const std::vector<double>& theta) {
  check_theta(c, theta);
  const std::int64_t dim = std::int64_t{1} << c.nsites;
  StateVector psi = StateVector::Zero(dim);
  psi[0] = 1.0;
  for (const auto& g : gate_list(c)) {
    if (g.kind == Gate::Kind::Ry) apply_ry(psi, g.q0, theta[g.param]);
    else apply_cz(psi, g.q0, g.q1);
  }
  return psi;
}

double energy(const AnsatzCircuit& c, const std::vector<double>& theta,
              const PauliSum& h) {
  return expectation(h, apply_ansatz(c, theta));
}

std::vector<double> energy_gradient(const AnsatzCircuit& c,
                                    const std::vector<double>& theta,
                                    const PauliSum& h) {
  check_theta(c, theta);
  const auto gates = gate_list(c);
  StateVector psi = apply_ansatz(c, theta);
  StateVector lam = qcc::apply(h, psi);
  std::vector<double> grad(theta.size(), 0.0);
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
    if (it->kind == Gate::Kind::Ry) {
      apply_ry(psi, it->q0, -theta[it->param]);  // pull state before gate
      grad[it->param] = ry_grad_overlap(lam, psi, it->q0, theta[it->param]);
      apply_ry(lam, it->q0, -theta[it->param]);
    } else {
      apply_cz(psi, it->q0, it->q1);
      apply_cz(lam, it->q0, it->q1);
    }
  }
  return grad;
}

namespace {

// Monotone L-BFGS with Armijo backtracking; deterministic.
struct LbfgsOut {
  std::vector<double> x;
  double f = 0.0;
};

LbfgsOut lbfgs_minimize(const AnsatzCircuit& c, const PauliSum& h,
                        std::vector<double> x, int max_iter, double gtol) {
  const int n = static_cast<int>(x.size());
  const int mem = 10;
  std::vector<std::vector<double>> s_hist, y_hist;
  std::vector<double> rho_hist;

  auto dot = [n](const std::vector<double>& a, const std::vector<double>& b) {
    double d = 0;
    for (int i = 0; i < n; ++i) d += a[i] * b[i];
    return d;
  };

  double f = energy(c, x, h);
  std::vector<double> g = energy_gradient(c, x, h);

  for (int iter = 0; iter < max_iter; ++iter) {
    double gnorm = 0;
    for (double v : g) gnorm = std::max(gnorm, std::abs(v));
    if (gnorm < gtol) break;

    // Two-loop recursion.
    std::vector<double> q = g;
    const int m = static_cast<int>(s_hist.size());
    std::vector<double> alpha(m);
    for (int i = m - 1; i >= 0; --i) {
      alpha[i] = rho_hist[i] * dot(s_hist[i], q);
      for (int j = 0; j < n; ++j) q[j] -= alpha[i] * y_hist[i][j];
    }
    double gamma = 1.0;
    if (m > 0) {
      const double yy = dot(y_hist[m - 1], y_hist[m - 1]);
      if (yy > 0) gamma = dot(s_hist[m - 1], y_hist[m - 1]) / yy;
    }
    for (double& v : q) v *= gamma;
    for (int i = 0; i < m; ++i) {
      const double beta = rho_hist[i] * dot(y_hist[i], q);
      for (int j = 0; j < n; ++j) q[j] += (alpha[i] - beta) * s_hist[i][j];
    }
    // q is now the ascent direction estimate; descend along -q.
    double dg = -dot(q, g);
    std::vector<double> dir(n);
    if (dg >= 0) {
      for (int j = 0; j < n; ++j) dir[j] = -g[j];
      dg = -dot(g, g);
    } else {
      for (int j = 0; j < n; ++j) dir[j] = -q[j];
    }

    double step = 1.0;
    const double c1 = 1e-4;
    std::vector<double> xn(n);
    double fn = f;
    bool accepted = false;
    for (int ls = 0; ls < 40; ++ls) {
      for (int j = 0; j < n; ++j) xn[j] = x[j] + step * dir[j];
      fn = energy(c, xn, h);
      if (fn <= f + c1 * step * dg) { accepted = true; break; }
      step *= 0.5;
    }
    if (!accepted) break;  // stagnation: no descent at machine scale

    std::vector<double> gn = energy_gradient(c, xn, h);
    std::vector<double> s(n), y(n);
    for (int j = 0; j < n; ++j) {
      s[j] = xn[j] - x[j];
      y[j] = gn[j] - g[j];
    }
    const double sy = dot(s, y);
    if (sy > 1e-12) {
      s_hist.push_back(std::move(s));
      y_hist.push_back(std::move(y));
      rho_hist.push_back(1.0 / sy);
      if (static_cast<int>(s_hist.size()) > mem) {
        s_hist.erase(s_hist.begin());
        y_hist.erase(y_hist.begin());
        rho_hist.erase(rho_hist.begin());
      }
    }
    x = std::move(xn);
    f = fn;
    g = std::move(gn);
  }
  return {std::move(x), f};
}

}  // namespace

VqeResult optimize(const PauliSum& h, int layers,
                   const OptimizeOptions& opts) {
  if (layers < 0) throw std::invalid_argument("optimize: d < 0");
  AnsatzCircuit c{h.nsites(), layers};
  const int np = c.parameter_count();

  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> u(-opts.init_scale, opts.init_scale);
  std::uniform_real_distribution<double> uwide(-std::numbers::pi, std::numbers::pi);

  LbfgsOut best;
  best.f = std::numeric_limits<double>::infinity();
  const int nstarts = std::max(1, opts.restarts);
  int deterministic = 0;
  for (int r = 0; r < nstarts; ++r) {
    std::vector<double> x0(np, 0.0);
    if (r == 0 && opts.warm_start) {
      if (static_cast<int>(opts.warm_start->size()) != np)
        throw std::invalid_argument("optimize: warm start size mismatch");
      x0 = *opts.warm_start;
      ++deterministic;
    } else if (r == deterministic) {
      // Spin-flip start: final Ry column at pi prepares |11...1>, the basin a
      // symmetry-breaking bias selects but small-angle starts cannot reach.
      for (int i = np - c.nsites; i < np; ++i) x0[i] = std::numbers::pi;
    } else if (r == deterministic + 1) {
      for (double& v : x0) v = u(rng);
    } else {
      for (double& v : x0) v = uwide(rng);
    }
    LbfgsOut out =
        lbfgs_minimize(c, h, std::move(x0), opts.max_iterations,
                       opts.gradient_tol);
    if (out.f < best.f) best = std::move(out);
  }

  auto eig = lowest_eigenpairs(h, 2);
  const StateVector psi = apply_ansatz(c, best.x);
  VqeResult res;
  res.theta = best.x;
  res.energy = best.f;
  res.layers = layers;
  res.ground_energy = eig.pairs[0].energy;
  res.gap = eig.pairs[1].energy - eig.pairs[0].energy;
  res.fidelity = std::norm(psi.dot(eig.pairs[0].vector));
  res.subspace_fidelity = res.fidelity + std::norm(psi.dot(eig.pairs[1].vector));
  res.complexity = circuit_complexity(c, res.theta);
  res.converged = res.fidelity >= opts.fidelity_threshold;
  return res;
}

ConvergencePoint depth_scan(const PauliSum& h, double coupling, int d_max,
                            const OptimizeOptions& opts) {
  ConvergencePoint pt;
  pt.coupling = coupling;
  const int l = h.nsites();
  VqeResult best_attempt;
  best_attempt.fidelity = -1.0;
  std::optional<std::vector<double>> warm;
  for (int d = 1; d <= d_max; ++d) {
    OptimizeOptions o = opts;
    o.seed = opts.seed + static_cast<std::uint64_t>(d) * 1000003ULL;
    if (warm) {
      // Prepend a zero-angle layer: Ry(0) is the identity and |0...0> is a
      // CZ eigenstate, so the padded circuit reproduces the previous state.
      std::vector<double> padded(2 * (l - 1), 0.0);
      padded.insert(padded.end(), warm->begin(), warm->end());
      o.warm_start = std::move(padded);
    }
    VqeResult r = optimize(h, d, o);
    pt.fidelity_by_depth.push_back(r.fidelity);
    warm = r.theta;
    if (r.fidelity > best_attempt.fidelity) best_attempt = r;
    if (r.converged) {
      pt.best = std::move(r);
      return pt;
    }
  }
  pt.best = std::move(best_attempt);
  return pt;
}

double circuit_complexity(const AnsatzCircuit& c,
                          const std::vector<double>& theta) {
  check_theta(c, theta);
  const int per_layer = 2 * (c.nsites - 1);
  const double cz_part =
      3.0 * (c.nsites - 1) * std::pow(std::numbers::pi / 4.0, 2);
  double total = 0.0;
  for (int d = 0; d < c.layers; ++d) {
    double acc = cz_part;
    for (int i = 0; i < per_layer; ++i) {
      const double half = 0.5 * theta[d * per_layer + i];
      acc += half * half;
    }
    total += std::sqrt(acc);
  }
  return total;
}

AfmDiagnostics afm_diagnostics(const StateVector& psi, const PauliSum& h) {
  const int l = h.nsites();
  const std::int64_t dim = std::int64_t{1} << l;
  if (psi.size() != dim)
    throw std::invalid_argument("afm_diagnostics: dim mismatch");
  AfmDiagnostics d;
  d.sz_per_site.assign(l, 0.0);
  for (std::int64_t b = 0; b < dim; ++b) {
    const double w = std::norm(psi[b]);
    if (w == 0.0) continue;
    for (int q = 0; q < l; ++q)
      d.sz_per_site[q] += w * (((b >> q) & 1) ? -1.0 : 1.0);
  }
  d.occupation_per_site.resize(l);
  double total = 0.0;
  for (int q = 0; q < l; ++q) {
    d.occupation_per_site[q] = 0.5 * (1.0 - d.sz_per_site[q]);
    total += d.sz_per_site[q];
  }
  d.magnetization_per_site = total / l;

  auto eig = lowest_eigenpairs(h, 2);
  d.fidelity = std::norm(psi.dot(eig.pairs[0].vector));
  d.subspace_fidelity = d.fidelity + std::norm(psi.dot(eig.pairs[1].vector));
  const double e = expectation(h, psi);
  const double e0 = eig.pairs[0].energy;
  d.energy_accuracy = 1.0 - std::abs(e - e0) / std::max(1e-300, std::abs(e0));
  return d;
}

}  // namespace qcc::vqe
