#include "qcc/adiabatic.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qcc/lanczos.hpp"
#include "qcc/trotter.hpp"

namespace qcc::adiabatic {

namespace {
constexpr double kPi = std::numbers::pi;
}

double Schedule::lambda(double t) const {
  const double inner = std::sin(kPi * t / (2.0 * total_time));
  const double s = std::sin(0.5 * kPi * inner * inner);
  return s * s;
}

double Schedule::lambda_dot(double t) const {
  const double w = kPi * t / (2.0 * total_time);
  const double inner = std::sin(w) * std::sin(w);
  // d/dt sin^2((pi/2) u) = (pi/2) sin(pi u) du/dt, u = sin^2(w).
  const double du = 2.0 * std::sin(w) * std::cos(w) * kPi / (2.0 * total_time);
  return 0.5 * kPi * std::sin(kPi * inner) * du;
}

double Schedule::step() const { return std::min(0.1, total_time / 30.0); }

std::vector<PauliSum> cd_basis_tfi(int nsites) {
  PauliSum b(nsites);
  for (int i = 0; i + 1 < nsites; ++i) {
    b.add(1.0, {{i, Pauli::Y}, {i + 1, Pauli::Z}});
    b.add(1.0, {{i, Pauli::Z}, {i + 1, Pauli::Y}});
  }
  b.canonicalize();
  return {b};
}

std::vector<PauliSum> cd_basis_zzxz(int nsites) {
  PauliSum y(nsites), yz(nsites), zy(nsites);
  for (int i = 0; i < nsites; ++i) y.add(1.0, {{i, Pauli::Y}});
  for (int i = 0; i + 1 < nsites; ++i) {
    yz.add(1.0, {{i, Pauli::Y}, {i + 1, Pauli::Z}});
    zy.add(1.0, {{i, Pauli::Z}, {i + 1, Pauli::Y}});
  }
  y.canonicalize();
  yz.canonicalize();
  zy.canonicalize();
  return {y, yz, zy};
}

CdSolution cd_coefficients(const PauliSum& h, const PauliSum& dh,
                           const std::vector<PauliSum>& basis) {
  const int n = static_cast<int>(basis.size());
  std::vector<PauliSum> k_ops;
  k_ops.reserve(n);
  for (const auto& b : basis) k_ops.push_back(commutator_i(h, b));

  Eigen::MatrixXd m(n, n);
  Eigen::VectorXd rhs(n);
  for (int a = 0; a < n; ++a) {
    rhs[a] = pauli_trace_inner(dh, k_ops[a]);
    for (int b = a; b < n; ++b)
      m(a, b) = m(b, a) = pauli_trace_inner(k_ops[a], k_ops[b]);
  }

  CdSolution sol;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
  lu.setThreshold(1e-12);
  if (lu.rank() == n) {
    Eigen::VectorXd c = lu.solve(rhs);
    sol.coefficients.assign(c.data(), c.data() + n);
  } else {
    Eigen::VectorXd c =
        m.completeOrthogonalDecomposition().pseudoInverse() * rhs;
    sol.coefficients.assign(c.data(), c.data() + n);
    sol.used_pseudoinverse = true;
  }
  return sol;
}

namespace {

struct ProtocolPieces {
  PauliSum h0;              // lambda-independent part
  PauliSum h_int;           // multiplied by lambda(t)
  std::vector<PauliSum> cd_basis;
  StateVector initial_state;
  // Trotter groups (coefficient 1; scaled per step): h0 group(s), h_int
  // group(s), CD groups split into commuting bond subsets.
  std::vector<PauliSum> g_h0, g_int;
  std::vector<std::vector<PauliSum>> g_cd;  // per basis family
};

PauliSum bond_subset(const PauliSum& family, int parity) {
  // Terms whose lowest acted site has the given parity; for nearest-
  // neighbour families this yields internally commuting groups.
  PauliSum out(family.nsites());
  for (const auto& t : family.terms()) {
    int lowest = 0;
    const std::uint64_t support = t.xmask | t.zmask;
    while (!((support >> lowest) & 1)) ++lowest;
    if (lowest % 2 == parity) out.add(t);
  }
  out.canonicalize();
  return out;
}

std::vector<PauliSum> split_commuting(const PauliSum& family) {
  if (is_commuting(family)) return {family};
  auto even = bond_subset(family, 0);
  auto odd = bond_subset(family, 1);
  if (!is_commuting(even) || !is_commuting(odd))
    throw std::logic_error("split_commuting: even/odd split not commuting");
  return {even, odd};
}

ProtocolPieces make_pieces(const ProtocolParams& p) {
  ProtocolPieces pc;
  const int l = p.nsites;
  const Eigen::Index dim = Eigen::Index{1} << l;

  if (p.model == ProtocolModel::Tfi && p.ramp == TfiRamp::RampField) {
    // Appendix path: fixed classical Ising bonds, ramp the transverse field.
    PauliSum bonds(l), field(l);
    for (int i = 0; i + 1 < l; ++i)
      bonds.add(-p.coupling, {{i, Pauli::Z}, {i + 1, Pauli::Z}});
    for (int i = 0; i < l; ++i) field.add(p.field_x, {{i, Pauli::X}});
    bonds.canonicalize();
    field.canonicalize();
    pc.h0 = bonds;
    pc.h_int = field;
    pc.cd_basis = cd_basis_tfi(l);
    // Classical ground manifold is twofold degenerate; start in the
    // even-parity symmetric combination, the branch connected by the sweep.
    StateVector psi = StateVector::Zero(dim);
    psi[0] = psi[dim - 1] = 1.0 / std::sqrt(2.0);
    pc.initial_state = psi;
    pc.g_h0 = {bonds};
    pc.g_int = {field};
  } else {
    PauliSum field(l);
    for (int i = 0; i < l; ++i) field.add(p.field_x, {{i, Pauli::X}});
    field.canonicalize();
    pc.h0 = field;
    PauliSum inter(l);
    if (p.model == ProtocolModel::Tfi) {
      for (int i = 0; i + 1 < l; ++i)
        inter.add(-p.coupling, {{i, Pauli::Z}, {i + 1, Pauli::Z}});
      pc.cd_basis = cd_basis_tfi(l);
    } else {
      for (int i = 0; i + 1 < l; ++i)
        inter.add(p.coupling, {{i, Pauli::Z}, {i + 1, Pauli::Z}});
      for (int i = 0; i < l; ++i) inter.add(p.field_z, {{i, Pauli::Z}});
      pc.cd_basis = cd_basis_zzxz(l);
    }
    inter.canonicalize();
    pc.h_int = inter;
    auto gs = lowest_eigenpairs(pc.h0, 1);
    pc.initial_state = gs.pairs[0].vector;
    pc.g_h0 = {field};
    pc.g_int = {inter};  // all-diagonal, internally commuting
  }

  for (const auto& fam : pc.cd_basis) pc.g_cd.push_back(split_commuting(fam));
  return pc;
}

CoefficientSnapshot snapshot_of(const PauliSum& h0, const PauliSum& h_int,
                                double lam,
                                const std::vector<PauliSum>& cd_basis,
                                const std::vector<double>& cd_scale) {
  CoefficientSnapshot snap;
  for (const auto& t : h0.terms())
    snap.entries.emplace_back(t.coefficient, t.weight());
  for (const auto& t : h_int.terms())
    snap.entries.emplace_back(lam * t.coefficient, t.weight());
  for (std::size_t a = 0; a < cd_basis.size(); ++a)
    for (const auto& t : cd_basis[a].terms())
      snap.entries.emplace_back(cd_scale[a] * t.coefficient, t.weight());
  return snap;
}

}  // namespace

EvolutionTrace evolve(const ProtocolParams& p, double total_time) {
  if (total_time <= 0) throw std::invalid_argument("evolve: T <= 0");
  const Schedule sched{total_time};
  const double dt_nominal = sched.step();
  const int nsteps = std::max(1, static_cast<int>(std::ceil(total_time / dt_nominal)));
  const double dt = total_time / nsteps;

  ProtocolPieces pc = make_pieces(p);
  StateVector psi = pc.initial_state;

  EvolutionTrace trace;
  trace.total_time = total_time;
  trace.step = dt;

  StateVector eig_seed;  // branch tracking across steps
  const std::size_t nfam = pc.cd_basis.size();
  std::vector<double> cd_scale(nfam, 0.0);

  for (int n = 0; n < nsteps; ++n) {
    const double tm = (n + 0.5) * dt;
    const double lam = sched.lambda(tm);
    const double lam_dot = sched.lambda_dot(tm);

    if (p.with_cd) {
      PauliSum h_lam = pc.h0 + lam * pc.h_int;
      auto sol = cd_coefficients(h_lam, pc.h_int, pc.cd_basis);
      for (std::size_t a = 0; a < nfam; ++a)
        cd_scale[a] = lam_dot * sol.coefficients[a];
    }

    trace.times.push_back(tm);
    trace.lambdas.push_back(lam);
    trace.snapshots.push_back(
        snapshot_of(pc.h0, pc.h_int, lam, pc.cd_basis, cd_scale));

    // One first-order step with exact group exponentials.
    for (const auto& g : pc.g_h0) psi = exp_apply(g, dt, psi);
    for (const auto& g : pc.g_int) psi = exp_apply(g, dt * lam, psi);
    if (p.with_cd)
      for (std::size_t a = 0; a < nfam; ++a)
        for (const auto& g : pc.g_cd[a])
          psi = exp_apply(g, dt * cd_scale[a], psi);

    if (n % p.diag_stride == 0 || n == nsteps - 1) {
      const double t_end = (n + 1) * dt;
      PauliSum h_now = pc.h0 + sched.lambda(t_end) * pc.h_int;
      LanczosOptions opts;
      opts.seed = eig_seed;
      auto eig = lowest_eigenpairs(h_now, 2, opts);
      eig_seed = eig.pairs[0].vector;
      trace.fidelity_instantaneous.push_back(
          std::norm(psi.dot(eig.pairs[0].vector)));
      trace.gaps.push_back(eig.pairs[1].energy - eig.pairs[0].energy);
      if (n == nsteps - 1) trace.final_fidelity = trace.fidelity_instantaneous.back();
    } else {
      trace.fidelity_instantaneous.push_back(-1.0);
      trace.gaps.push_back(-1.0);
    }
  }

  trace.nielsen_complexity =
      nielsen_cost(trace.snapshots, dt, total_time, CostWeights{});
  return trace;
}

MinimalTimeResult minimal_time_scan(const ProtocolParams& p,
                                    const std::vector<double>& t_grid,
                                    double fidelity_threshold) {
  MinimalTimeResult res;
  for (double t : t_grid) {
    EvolutionTrace trace = evolve(p, t);
    res.times_scanned.push_back(t);
    res.final_fidelities.push_back(trace.final_fidelity);
    res.complexities.push_back(trace.nielsen_complexity);
    res.best_fidelity = std::max(res.best_fidelity, trace.final_fidelity);
    if (!res.reached && trace.final_fidelity >= fidelity_threshold) {
      res.reached = true;
      res.minimal_time = t;
      res.complexity_at_minimal = trace.nielsen_complexity;
    }
  }
  return res;
}

}  // namespace qcc::adiabatic
