#include "qcc/lanczos.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>
#include <sstream>

namespace qcc {

StateVector lanczos_default_seed(Eigen::Index dim) {
  // Fixed-seed pseudo-random start: overlaps every symmetry sector.
  std::mt19937_64 rng(0x5eedULL);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  StateVector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v[i] = Complex(u(rng), u(rng));
  v.normalize();
  return v;
}

LanczosResult lowest_eigenpairs(const LinearOp& op, Eigen::Index dim, int k,
                                const LanczosOptions& opts) {
  if (k < 1) throw std::invalid_argument("lowest_eigenpairs: k < 1");
  if (dim < 1) throw std::invalid_argument("lowest_eigenpairs: empty space");

  StateVector v = opts.seed.size() == dim ? opts.seed.normalized()
                                          : lanczos_default_seed(dim);

  const int m_max = static_cast<int>(std::min<Eigen::Index>(opts.max_iter, dim));
  std::vector<StateVector> basis;
  basis.reserve(m_max);
  std::vector<double> alpha, beta;

  LanczosResult res;
  basis.push_back(v);

  Eigen::VectorXd ritz_vals;
  Eigen::MatrixXd ritz_vecs;
  double beta_last = 0.0;

  auto diagonalize = [&](int m) {
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
    for (int i = 0; i < m; ++i) {
      t(i, i) = alpha[i];
      if (i + 1 < m) t(i, i + 1) = t(i + 1, i) = beta[i];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
    ritz_vals = es.eigenvalues();
    ritz_vecs = es.eigenvectors();
  };

  int m = 0;
  for (; m < m_max; ++m) {
    StateVector w = op(basis[m]);
    const double a = basis[m].dot(w).real();
    alpha.push_back(a);
    w -= a * basis[m];
    if (m > 0) w -= beta[m - 1] * basis[m - 1];
    // Full reorthogonalization, twice for stability.
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& q : basis) w -= q.dot(w) * q;
    const double b = w.norm();

    const int mm = m + 1;
    if (mm >= k && (mm % 5 == 0 || b < 1e-14 || mm == m_max)) {
      diagonalize(mm);
      // Residual of Ritz pair j is |beta_m * s_{m,j}|.
      double worst = 0.0;
      for (int j = 0; j < k && j < mm; ++j)
        worst = std::max(worst, std::abs(b * ritz_vecs(mm - 1, j)));
      res.max_residual = worst;
      if (mm >= k && (worst < opts.tol || b < 1e-14)) {
        res.converged = true;
        beta_last = b;
        m = mm;
        break;
      }
    }
    if (b < 1e-14) {
      // Invariant subspace exhausted; restart direction orthogonal to span.
      StateVector r = lanczos_default_seed(dim);
      for (const auto& q : basis) r -= q.dot(r) * q;
      const double rn = r.norm();
      if (rn < 1e-12) { m = mm; diagonalize(mm); res.converged = mm >= k; break; }
      beta.push_back(0.0);
      basis.push_back(r / rn);
      continue;
    }
    beta.push_back(b);
    basis.push_back(w / b);
  }

  if (ritz_vals.size() == 0) diagonalize(static_cast<int>(alpha.size()));
  const int msz = static_cast<int>(ritz_vals.size());
  res.iterations = msz;
  (void)beta_last;

  if (!res.converged) {
    std::ostringstream os;
    os << "lowest_eigenpairs: no convergence after " << msz
       << " iterations, max residual " << res.max_residual;
    throw std::runtime_error(os.str());
  }
  if (msz < k)
    throw std::runtime_error("lowest_eigenpairs: Krylov space smaller than k");

  res.pairs.resize(k);
  for (int j = 0; j < k; ++j) {
    res.pairs[j].energy = ritz_vals[j];
    StateVector y = StateVector::Zero(dim);
    for (int i = 0; i < msz; ++i) y += ritz_vecs(i, j) * basis[i];
    y.normalize();
    res.pairs[j].vector = std::move(y);
  }
  if (k >= 2) {
    const double e0 = res.pairs[0].energy;
    res.degenerate_ground =
        (res.pairs[1].energy - e0) <
        opts.degeneracy_rtol * std::max(1.0, std::abs(e0));
  }
  return res;
}

LanczosResult lowest_eigenpairs(const PauliSum& h, int k,
                                const LanczosOptions& opts) {
  const Eigen::Index dim = Eigen::Index{1} << h.nsites();
  return lowest_eigenpairs(
      [&h](const StateVector& x) { return apply(h, x); }, dim, k, opts);
}

}  // namespace qcc
