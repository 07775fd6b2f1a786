#include <doctest.h>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include "qcc/ising_analytic.hpp"
#include "qcc/lanczos.hpp"
#include "qcc/models.hpp"
#include "test_helpers.hpp"

using namespace qcc;

TEST_SUITE_BEGIN("models");

TEST_CASE("TFI term counts") {
  SUBCASE("L=2, J=0, open: field terms only") {
    TfiParams p;
    p.nsites = 2;
    p.coupling = 0.0;
    p.boundary = Boundary::Open;
    const PauliSum h = build_tfi(p);
    CHECK(h.size() == 2);
    for (const auto& t : h.terms()) CHECK(t.weight() == 1);
  }
  SUBCASE("L=3, J=1, periodic: 3 bonds + 3 fields") {
    TfiParams p;
    p.nsites = 3;
    p.coupling = 1.0;
    CHECK(build_tfi(p).size() == 6);
  }
}

TEST_CASE("TFI L=8 periodic ground energy matches the free-fermion solution") {
  TfiParams p;
  p.nsites = 8;
  p.coupling = 1.5;
  auto res = lowest_eigenpairs(build_tfi(p), 1);
  CHECK(std::abs(res.pairs[0].energy - ising::ground_energy(1.5, 8)) < 1e-8);
}

TEST_CASE("ZZXZ") {
  SUBCASE("J=0: decoupled qubits") {
    ZzxzParams p;
    p.nsites = 6;
    p.coupling = 0.0;
    auto res = lowest_eigenpairs(build_zzxz(p), 1);
    const double single = -std::sqrt(p.field_x * p.field_x + p.field_z * p.field_z);
    CHECK(res.pairs[0].energy == doctest::Approx(6.0 * single));
  }
  SUBCASE("L=2 open vs dense 4x4") {
    ZzxzParams p;
    p.nsites = 2;
    const PauliSum h = build_zzxz(p);
    auto res = lowest_eigenpairs(h, 1);
    CHECK(res.pairs[0].energy ==
          doctest::Approx(testutil::dense_ground_energy(h.to_dense())));
  }
  SUBCASE("L=12, J=2: antiferromagnetic order") {
    ZzxzParams p;
    p.nsites = 12;
    p.coupling = 2.0;
    const PauliSum h = build_zzxz(p);
    auto res = lowest_eigenpairs(h, 1);
    const StateVector& gs = res.pairs[0].vector;
    for (int i = 0; i + 1 < 12; ++i) {
      PauliSum zz(12);
      zz.add(1.0, {{i, Pauli::Z}, {i + 1, Pauli::Z}});
      zz.canonicalize();
      CHECK(expectation(zz, gs) < -0.6);
    }
  }
}

namespace {

Eigen::MatrixXd dicke_dense(const DickeParams& p) {
  Eigen::SparseMatrix<double> h = build_dicke_finite(p);
  return Eigen::MatrixXd(h);
}

}  // namespace

TEST_CASE("Dicke finite-N construction") {
  SUBCASE("lambda=0: ground state |m=-S> x |0>") {
    DickeParams p;
    p.nspins = 10;
    p.coupling = 0.0;
    p.boson_cutoff = 8;
    Eigen::MatrixXd h = dicke_dense(p);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    CHECK(es.eigenvalues()[0] == doctest::Approx(-p.omega_spin * 5.0));
    CHECK(std::abs(es.eigenvectors().col(0)[0]) == doctest::Approx(1.0));
  }
  SUBCASE("N=1 equals the Rabi model") {
    DickeParams p;
    p.nspins = 1;
    p.coupling = 0.4;
    p.boson_cutoff = 25;
    Eigen::MatrixXd h = dicke_dense(p);

    const int nb = p.boson_cutoff;
    Eigen::MatrixXd num = Eigen::MatrixXd::Zero(nb, nb);
    Eigen::MatrixXd quad = Eigen::MatrixXd::Zero(nb, nb);
    for (int n = 0; n < nb; ++n) num(n, n) = n;
    for (int n = 0; n + 1 < nb; ++n) {
      quad(n + 1, n) = quad(n, n + 1) = std::sqrt(n + 1.0);
    }
    Eigen::Matrix2d sz, sx;
    sz << -0.5, 0.0, 0.0, 0.5;   // spin-major, m = -1/2 first
    sx << 0.0, 1.0, 1.0, 0.0;    // S+ + S- for S = 1/2
    const Eigen::MatrixXd rabi =
        Eigen::kroneckerProduct(Eigen::Matrix2d::Identity(), num).eval() *
            p.omega_cavity +
        Eigen::kroneckerProduct(sz, Eigen::MatrixXd::Identity(nb, nb)).eval() *
            p.omega_spin +
        Eigen::kroneckerProduct(sx, quad).eval() * p.coupling;

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ea(h), eb(rabi);
    for (int i = 0; i < 4; ++i)
      CHECK(ea.eigenvalues()[i] == doctest::Approx(eb.eigenvalues()[i]).epsilon(1e-10));
  }
  SUBCASE("cutoff adequacy diagnostic") {
    DickeParams p;
    p.nspins = 10;
    p.coupling = 0.45;
    p.boson_cutoff = 30;
    Eigen::MatrixXd h = dicke_dense(p);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    StateVector gs = es.eigenvectors().col(0).cast<Complex>();
    CHECK(dicke_top_level_population(p, gs) < 1e-6);
  }
}

TEST_SUITE_END();
