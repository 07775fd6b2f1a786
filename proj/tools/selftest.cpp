#include "selftest.hpp"

#include <cmath>
#include <functional>
#include <memory>
#include <numbers>
#include <ostream>
#include <random>
#include <vector>

#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include "qcc/adiabatic.hpp"
#include "qcc/dicke_gaussian.hpp"
#include "qcc/fs_geometry.hpp"
#include "qcc/ising_analytic.hpp"
#include "qcc/lanczos.hpp"
#include "qcc/models.hpp"
#include "qcc/pauli.hpp"
#include "qcc/scaling.hpp"
#include "qcc/trotter.hpp"
#include "qcc/vqe.hpp"

namespace qcc::selftest {

namespace {

struct Runner {
  std::ostream& out;
  int failures = 0;

  void check(const char* name, bool ok) {
    out << (ok ? "  ok   " : "  FAIL ") << name << "\n";
    if (!ok) ++failures;
  }
};

PauliSum random_sum(int nsites, int nterms, std::mt19937_64& rng) {
  PauliSum s(nsites);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  std::uniform_int_distribution<int> letter(0, 3);
  for (int t = 0; t < nterms; ++t) {
    std::map<int, Pauli> letters;
    for (int i = 0; i < nsites; ++i) {
      switch (letter(rng)) {
        case 1: letters[i] = Pauli::X; break;
        case 2: letters[i] = Pauli::Y; break;
        case 3: letters[i] = Pauli::Z; break;
        default: break;
      }
    }
    if (letters.empty()) letters[0] = Pauli::Z;
    s.add(coeff(rng), letters);
  }
  s.canonicalize();
  return s;
}

StateVector random_state(Eigen::Index dim, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  StateVector psi(dim);
  for (Eigen::Index i = 0; i < dim; ++i) psi[i] = Complex(n(rng), n(rng));
  psi.normalize();
  return psi;
}

void pauli_oracles(Runner& r) {
  std::mt19937_64 rng(101);
  bool apply_ok = true, trace_ok = true, comm_ok = true;
  const Complex ii(0.0, 1.0);
  for (int rep = 0; rep < 6; ++rep) {
    const PauliSum a = random_sum(3, 3, rng);
    const PauliSum b = random_sum(3, 3, rng);
    const Eigen::MatrixXcd ad = a.to_dense(), bd = b.to_dense();
    StateVector psi = random_state(8, rng);
    if ((qcc::apply(a, psi) - ad * psi).norm() > 1e-12) apply_ok = false;
    const Complex tr = (ad * bd).trace() / 8.0;
    if (std::abs(pauli_trace_inner(a, b) - tr.real()) > 1e-12) trace_ok = false;
    const Eigen::MatrixXcd expect = ii * (ad * bd - bd * ad);
    if ((commutator_i(a, b).to_dense() - expect).norm() > 1e-11)
      comm_ok = false;
  }
  r.check("pauli apply vs dense matrix (L=3)", apply_ok);
  r.check("pauli trace inner vs dense trace", trace_ok);
  r.check("commutator i[A,B] vs dense arithmetic", comm_ok);
}

void eigensolver_oracles(Runner& r) {
  TfiParams p;
  p.nsites = 8;
  p.coupling = 1.0;
  const PauliSum h = build_tfi(p);
  auto res = lowest_eigenpairs(h, 1);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h.to_dense());
  r.check("lanczos TFI L=8 vs dense diagonalization (1e-9)",
          std::abs(res.pairs[0].energy - es.eigenvalues()[0]) < 1e-9);

  TfiParams p10;
  p10.nsites = 10;
  p10.coupling = 0.9;
  p10.boundary = Boundary::Open;
  const PauliSum h10 = build_tfi(p10);
  auto r10 = lowest_eigenpairs(h10, 1);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es10(h10.to_dense());
  r.check("lanczos TFI L=10 open vs dense diagonalization",
          std::abs(r10.pairs[0].energy - es10.eigenvalues()[0]) < 1e-8);
}

void trotter_oracle(Runner& r) {
  PauliSum zz(4), x(4);
  for (int i = 0; i + 1 < 4; ++i)
    zz.add(-1.0, {{i, Pauli::Z}, {i + 1, Pauli::Z}});
  for (int i = 0; i < 4; ++i) x.add(1.0, {{i, Pauli::X}});
  zz.canonicalize();
  x.canonicalize();
  PauliSum h = zz + x;
  std::mt19937_64 rng(7);
  StateVector psi = random_state(16, rng);
  const Complex mi(0.0, -1.0);
  auto err = [&](double dt) {
    Eigen::MatrixXcd u = (mi * dt * h.to_dense()).exp();
    return (trotter_step({zz, x}, dt, psi) - u * psi).norm();
  };
  const double ratio = err(0.08) / err(0.04);
  r.check("trotter splitting error is O(dt^2) vs dense expm",
          ratio > 3.2 && ratio < 4.8);
}

void ising_oracles(Runner& r) {
  TfiParams p;
  p.nsites = 8;
  p.coupling = 0.5;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ea(build_tfi(p).to_dense());
  p.coupling = 0.6;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eb(build_tfi(p).to_dense());
  const double ed =
      std::abs(ea.eigenvectors().col(0).dot(eb.eigenvectors().col(0)));
  r.check("ising gs_overlap vs dense ED (L=8)",
          std::abs(ising::gs_overlap(0.5, 0.6, 8) - ed) < 1e-9);

  const double j = 0.8, d = 1e-4;
  const double g = ising::metric_finite(j, 64);
  const double f = ising::gs_overlap(j - d / 2, j + d / 2, 64);
  r.check("fidelity-susceptibility expansion 1-F^2 = g dJ^2 (L=64)",
          std::abs((1.0 - f * f) / (d * d) - g) < 1e-4 * g);
  r.check("thermodynamic metric vs finite sum per site (J=0.5)",
          std::abs(ising::metric_thermo(0.5) -
                   ising::metric_finite(0.5, 4096) / 4096.0) <
              1e-3 * ising::metric_thermo(0.5));
}

void chi_fd_oracle(Runner& r) {
  ParamPath path;
  auto seed = std::make_shared<StateVector>();
  path.ground_state_provider = [seed](double j) {
    TfiParams p;
    p.nsites = 8;
    p.coupling = j;
    LanczosOptions opts;
    if (seed->size() > 0) opts.seed = *seed;
    auto res = lowest_eigenpairs(build_tfi(p), 1, opts);
    *seed = res.pairs[0].vector;
    return res.pairs[0].vector;
  };
  auto s = chi_fd(path, 0.7, 1e-4);
  const double g = ising::metric_finite(0.7, 8);
  r.check("chi_fd vs analytic metric (TFI L=8, 1e-4)",
          std::abs(s.g - g) < 1e-4 * g);
}

void dicke_oracles(Runner& r) {
  bool round_trip = true;
  for (double lam : {0.2, 0.45, 0.7, 1.2}) {
    auto h = dicke::effective_ham(1.0, 1.0, lam);
    auto g = dicke::eigenmodes(h);
    if ((g.quad_form * g.quad_form - h.potential()).norm() > 1e-12)
      round_trip = false;
  }
  r.check("dicke eigenmode round trip (1e-12)", round_trip);

  double prev = 1.0;
  bool soft = true;
  for (double lam : {0.3, 0.4, 0.45, 0.49}) {
    auto g = dicke::eigenmodes(dicke::effective_ham(1.0, 1.0, lam));
    if (g.eps_minus >= prev) soft = false;
    prev = g.eps_minus;
  }
  r.check("dicke soft mode closes toward lambda_c", soft && prev < 0.35);
}

void cd_oracle(Runner& r) {
  const int l = 4;
  PauliSum h0(l), hint(l);
  for (int i = 0; i < l; ++i) h0.add(1.0, {{i, Pauli::X}});
  for (int i = 0; i + 1 < l; ++i)
    hint.add(-0.8, {{i, Pauli::Z}, {i + 1, Pauli::Z}});
  h0.canonicalize();
  hint.canonicalize();
  PauliSum h = h0 + 0.6 * hint;
  auto basis = adiabatic::cd_basis_tfi(l);
  auto sol = adiabatic::cd_coefficients(h, hint, basis);

  const Complex ii(0.0, 1.0);
  const Eigen::MatrixXcd hd = h.to_dense(), bd = basis[0].to_dense();
  const Eigen::MatrixXcd k = ii * (hd * bd - bd * hd);
  double best_alpha = 0.0, best = 1e300;
  for (double a = -1.0; a <= 1.0; a += 1e-4) {
    const Eigen::MatrixXcd g = hint.to_dense() - a * k;
    const double s = ((g * g).trace() / 16.0).real();
    if (s < best) { best = s; best_alpha = a; }
  }
  r.check("CD coefficient: linear solve vs dense-trace minimization (L=4)",
          std::abs(sol.coefficients[0] - best_alpha) < 2e-4);
}

void vqe_oracles(Runner& r) {
  // Dense gate-product check, L=2 d=1.
  vqe::AnsatzCircuit c2{2, 1};
  std::mt19937_64 rng(301);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  auto ry = [](double th) {
    Eigen::Matrix2cd m;
    m << std::cos(th / 2), -std::sin(th / 2), std::sin(th / 2), std::cos(th / 2);
    return m;
  };
  Eigen::Matrix4cd cz = Eigen::Vector4cd(1, 1, 1, -1).asDiagonal();
  bool dense_ok = true;
  for (int rep = 0; rep < 4; ++rep) {
    std::vector<double> th(4);
    for (auto& t : th) t = u(rng);
    Eigen::Matrix4cd u1 = Eigen::kroneckerProduct(ry(th[1]), ry(th[0]));
    Eigen::Matrix4cd u2 = Eigen::kroneckerProduct(ry(th[3]), ry(th[2]));
    Eigen::Vector4cd psi0 = Eigen::Vector4cd::Zero();
    psi0[0] = 1.0;
    if ((vqe::apply_ansatz(c2, th) - Eigen::Vector4cd(u2 * cz * u1 * psi0))
            .norm() > 1e-12)
      dense_ok = false;
  }
  r.check("vqe ansatz vs dense 4x4 gate product", dense_ok);

  // Parameter shift vs finite difference vs adjoint.
  TfiParams p;
  p.nsites = 4;
  p.coupling = 1.1;
  p.bias = 0.001;
  p.boundary = Boundary::Open;
  const PauliSum h = build_tfi(p);
  vqe::AnsatzCircuit c{4, 2};
  std::vector<double> th(c.parameter_count());
  for (auto& t : th) t = u(rng);
  const auto grad = vqe::energy_gradient(c, th, h);
  const double half_pi = std::numbers::pi / 2.0;
  bool shift_ok = true, fd_ok = true;
  for (std::size_t j = 0; j < th.size(); ++j) {
    auto tp = th, tm = th;
    tp[j] += half_pi;
    tm[j] -= half_pi;
    const double shift = (vqe::energy(c, tp, h) - vqe::energy(c, tm, h)) / 2.0;
    tp = th; tm = th;
    tp[j] += 1e-5;
    tm[j] -= 1e-5;
    const double fd = (vqe::energy(c, tp, h) - vqe::energy(c, tm, h)) / 2e-5;
    if (std::abs(grad[j] - shift) > 1e-10) shift_ok = false;
    if (std::abs(shift - fd) > 1e-6) fd_ok = false;
  }
  r.check("adjoint gradient equals parameter shift", shift_ok);
  r.check("parameter shift vs central finite difference (1e-6)", fd_ok);
}

void scaling_oracles(Runner& r) {
  std::mt19937_64 rng(77);
  std::normal_distribution<double> n(0.0, 0.01);
  std::vector<scaling::PeakEstimate> pts;
  for (double size : {16.0, 32.0, 64.0, 128.0, 256.0, 512.0, 1024.0}) {
    scaling::PeakEstimate p;
    p.size = size;
    p.y_max = (0.4 + 0.9 * std::pow(size, 2.0 / 3.0)) * (1.0 + n(rng));
    pts.push_back(p);
  }
  auto fit = scaling::fit_scaling(pts, scaling::ScalingLaw::PowerOffset);
  r.check("synthetic N^{2/3} round trip (delta within 0.05)",
          fit.converged && std::abs(fit.params[2] - 2.0 / 3.0) < 0.05);

  std::vector<scaling::PeakEstimate> logpts;
  for (double size : {128.0, 256.0, 512.0, 1024.0, 2048.0}) {
    scaling::PeakEstimate p;
    p.size = size;
    p.y_max = std::log(0.3 * std::sqrt(size));
    logpts.push_back(p);
  }
  auto lfit = scaling::fit_scaling(logpts, scaling::ScalingLaw::LogLinear);
  r.check("synthetic L^{1/2} log-log slope (0.5 within 0.02)",
          std::abs(lfit.params[1] - 0.5) < 0.02);
}

}  // namespace

int run(std::ostream& out) {
  Runner r{out};
  out << "oracle suite:\n";
  pauli_oracles(r);
  eigensolver_oracles(r);
  trotter_oracle(r);
  ising_oracles(r);
  chi_fd_oracle(r);
  dicke_oracles(r);
  cd_oracle(r);
  vqe_oracles(r);
  scaling_oracles(r);
  out << (r.failures == 0 ? "all oracle checks passed\n"
                          : "oracle checks FAILED\n");
  return r.failures;
}

}  // namespace qcc::selftest
