#include <doctest.h>

#include <random>

#include "qcc/models.hpp"
#include "qcc/pauli.hpp"
#include "test_helpers.hpp"

using namespace qcc;

TEST_SUITE_BEGIN("pauli");

TEST_CASE("single-site actions on basis states") {
  StateVector zero(2);
  zero << 1.0, 0.0;

  SUBCASE("Z eigenstate") {
    PauliSum z(1);
    z.add(1.0, {{0, Pauli::Z}});
    StateVector out = qcc::apply(z, zero);
    CHECK(std::abs(out[0] - 1.0) < 1e-15);
    CHECK(std::abs(out[1]) < 1e-15);
  }
  SUBCASE("X bit flip") {
    PauliSum x(1);
    x.add(1.0, {{0, Pauli::X}});
    StateVector out = qcc::apply(x, zero);
    CHECK(std::abs(out[0]) < 1e-15);
    CHECK(std::abs(out[1] - 1.0) < 1e-15);
  }
  SUBCASE("Y phase convention: Y|0> = i|1>") {
    PauliSum y(1);
    y.add(1.0, {{0, Pauli::Y}});
    StateVector out = qcc::apply(y, zero);
    CHECK(std::abs(out[1] - Complex(0.0, 1.0)) < 1e-15);
  }
}

TEST_CASE("TFI L=2 apply matches the dense 4x4 matrix") {
  TfiParams p;
  p.nsites = 2;
  p.coupling = 1.0;
  p.boundary = Boundary::Open;
  const PauliSum h = build_tfi(p);
  const Eigen::MatrixXcd hd = h.to_dense();

  StateVector psi(4);
  psi << 1.0, 0.0, 0.0, 0.0;  // |00>
  CHECK((qcc::apply(h, psi) - hd * psi).norm() < 1e-14);

  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 5; ++rep) {
    StateVector r = testutil::random_state(4, rng);
    CHECK((qcc::apply(h, r) - hd * r).norm() < 1e-13);
  }
}

TEST_CASE("apply matches dense on random 3-site sums") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 10; ++rep) {
    const PauliSum s = testutil::random_sum(3, 4, rng);
    const Eigen::MatrixXcd sd = s.to_dense();
    StateVector psi = testutil::random_state(8, rng);
    CHECK((qcc::apply(s, psi) - sd * psi).norm() < 1e-13);
  }
}

TEST_CASE("trace inner product") {
  SUBCASE("orthogonal strings") {
    PauliSum x(1), y(1);
    x.add(1.0, {{0, Pauli::X}});
    y.add(1.0, {{0, Pauli::Y}});
    CHECK(pauli_trace_inner(x, y) == doctest::Approx(0.0));
  }
  SUBCASE("orthonormality") {
    PauliSum a(1), b(1);
    a.add(2.0, {{0, Pauli::X}});
    b.add(3.0, {{0, Pauli::X}});
    CHECK(pauli_trace_inner(a, b) == doctest::Approx(6.0));
  }
  SUBCASE("random 3-term sums vs dense trace") {
    std::mt19937_64 rng(23);
    for (int rep = 0; rep < 10; ++rep) {
      const PauliSum a = testutil::random_sum(3, 3, rng);
      const PauliSum b = testutil::random_sum(3, 3, rng);
      const Complex tr = (a.to_dense() * b.to_dense()).trace() / 8.0;
      CHECK(std::abs(tr.imag()) < 1e-12);
      CHECK(pauli_trace_inner(a, b) == doctest::Approx(tr.real()).epsilon(1e-12));
    }
  }
}

TEST_CASE("commutator i[A,B] matches dense arithmetic") {
  std::mt19937_64 rng(31);
  const Complex ii(0.0, 1.0);
  for (int rep = 0; rep < 10; ++rep) {
    const PauliSum a = testutil::random_sum(3, 3, rng);
    const PauliSum b = testutil::random_sum(3, 3, rng);
    const PauliSum c = commutator_i(a, b);
    const Eigen::MatrixXcd ad = a.to_dense(), bd = b.to_dense();
    const Eigen::MatrixXcd expect = ii * (ad * bd - bd * ad);
    CHECK((c.to_dense() - expect).norm() < 1e-12);
  }
}

TEST_CASE("commutation predicate") {
  PauliSum zz_chain(3);
  zz_chain.add(1.0, {{0, Pauli::Z}, {1, Pauli::Z}});
  zz_chain.add(1.0, {{1, Pauli::Z}, {2, Pauli::Z}});
  zz_chain.canonicalize();
  CHECK(is_commuting(zz_chain));

  PauliSum mixed = zz_chain;
  mixed.add(1.0, {{1, Pauli::X}});
  mixed.canonicalize();
  CHECK_FALSE(is_commuting(mixed));
}

TEST_CASE("canonicalize merges duplicate strings") {
  PauliSum s(2);
  s.add(1.5, {{0, Pauli::X}});
  s.add(-0.5, {{0, Pauli::X}});
  s.add(1.0, {{1, Pauli::Z}});
  s.canonicalize();
  CHECK(s.size() == 2);
  double x_coeff = 0.0;
  for (const auto& t : s.terms())
    if (t.xmask == 1 && t.zmask == 0) x_coeff = t.coefficient;
  CHECK(x_coeff == doctest::Approx(1.0));
}

TEST_CASE("expectation on eigenstates") {
  PauliSum z(2);
  z.add(1.0, {{0, Pauli::Z}});
  z.add(1.0, {{1, Pauli::Z}});
  z.canonicalize();
  StateVector psi = StateVector::Zero(4);
  psi[0] = 1.0;  // |00>
  CHECK(expectation(z, psi) == doctest::Approx(2.0));
  psi[0] = 0.0;
  psi[3] = 1.0;  // |11>
  CHECK(expectation(z, psi) == doctest::Approx(-2.0));
}

TEST_SUITE_END();
