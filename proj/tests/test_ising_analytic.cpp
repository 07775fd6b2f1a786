#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qcc/ising_analytic.hpp"
#include "qcc/models.hpp"
#include "test_helpers.hpp"

using namespace qcc;
namespace ia = qcc::ising;

TEST_SUITE_BEGIN("ising-analytic");

TEST_CASE("Bogoliubov angle basics") {
  CHECK(ia::theta(0.0, 0.3) == doctest::Approx(0.0));
  CHECK(ia::theta(0.0, 2.5) == doctest::Approx(0.0));
  const double k = std::numbers::pi / 2.0;
  CHECK(ia::theta(0.7, k) == doctest::Approx(std::atan2(-0.7, 1.0)));
}

TEST_CASE("theta is continuous in J at k = 3pi/4") {
  const double k = 3.0 * std::numbers::pi / 4.0;
  double prev = ia::theta(0.0, k);
  for (double j = 1e-3; j <= 3.0 + 1e-12; j += 1e-3) {
    const double cur = ia::theta(j, k);
    CHECK(std::abs(cur - prev) < 0.1);
    prev = cur;
  }
}

TEST_CASE("theta_deriv matches a central difference") {
  const double k = 2.1;
  for (double j : {0.3, 0.9, 1.4}) {
    const double fd = (ia::theta(j + 1e-6, k) - ia::theta(j - 1e-6, k)) / 2e-6;
    CHECK(ia::theta_deriv(j, k) == doctest::Approx(fd).epsilon(1e-7));
  }
}

TEST_CASE("ground-state overlap") {
  SUBCASE("coincident couplings") {
    CHECK(ia::gs_overlap(0.7, 0.7, 64) == doctest::Approx(1.0));
  }
  SUBCASE("L=8 matches dense even-sector ED") {
    TfiParams p;
    p.nsites = 8;
    p.coupling = 0.5;
    Eigen::VectorXcd a = testutil::dense_ground_state(build_tfi(p).to_dense());
    p.coupling = 0.6;
    Eigen::VectorXcd b = testutil::dense_ground_state(build_tfi(p).to_dense());
    CHECK(ia::gs_overlap(0.5, 0.6, 8) ==
          doctest::Approx(std::abs(a.dot(b))).epsilon(1e-10));
  }
  SUBCASE("orthogonality catastrophe: overlap decays with L") {
    double prev = 1.0;
    for (int l : {16, 32, 64, 128, 256}) {
      const double f = ia::gs_overlap(0.8, 0.9, l);
      CHECK(f < prev);
      prev = f;
    }
  }
}

TEST_CASE("finite-size metric") {
  SUBCASE("closed evaluation at J=0, L=4") {
    CHECK(ia::metric_finite(0.0, 4) == doctest::Approx(0.25));
  }
  SUBCASE("fidelity-susceptibility expansion, L=64") {
    const double j = 0.8, d = 1e-4;
    const double g = ia::metric_finite(j, 64);
    const double f = ia::gs_overlap(j - d / 2.0, j + d / 2.0, 64);
    CHECK((1.0 - f * f) / (d * d) == doctest::Approx(g).epsilon(1e-5));
  }
  SUBCASE("peak position approaches J=1 with L") {
    auto peak = [](int l) {
      double best_j = 0.0, best = -1.0;
      for (double j = 0.8; j <= 1.2; j += 1e-4) {
        const double g = ia::metric_finite(j, l);
        if (g > best) { best = g; best_j = j; }
      }
      return best_j;
    };
    const double p32 = peak(32), p256 = peak(256);
    CHECK(std::abs(p256 - 1.0) < std::abs(p32 - 1.0));
    CHECK(std::abs(p256 - 1.0) < 0.02);
  }
  SUBCASE("duality relates J and 1/J") {
    for (double j : {0.3, 0.5, 0.8}) {
      const double lhs = ia::metric_finite(1.0 / j, 64);
      const double rhs = j * j * j * j * ia::metric_finite(j, 64);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    }
  }
}

TEST_CASE("thermodynamic metric") {
  SUBCASE("matches the finite sum per site at L=4096") {
    for (double j : {0.5, 1.5}) {
      CHECK(ia::metric_thermo(j) ==
            doctest::Approx(ia::metric_finite(j, 4096) / 4096.0).epsilon(1e-3));
    }
  }
  SUBCASE("diverges approaching |J| = 1") {
    CHECK(ia::metric_thermo(0.999) > 10.0 * ia::metric_thermo(0.9));
    CHECK(ia::metric_thermo(0.9999) > ia::metric_thermo(0.999));
  }
  SUBCASE("rejects the poles") {
    CHECK_THROWS(ia::metric_thermo(1.0));
    CHECK_THROWS(ia::metric_thermo(-1.0));
  }
}

TEST_CASE("Fubini-Study path length") {
  SUBCASE("zero-length path") {
    CHECK(ia::cfs_path(0.5, 0.5, 1e-3, 128) == doctest::Approx(0.0));
  }
  SUBCASE("quadrature converges away from the critical point") {
    const double a = ia::cfs_path(0.1, 0.8, 1e-3, 0);
    const double b = ia::cfs_path(0.1, 0.8, 5e-4, 0);
    CHECK(std::abs(a - b) < 1e-4);
  }
  SUBCASE("finite C_FS through J_c, kink sharpens with L") {
    // Path length stays finite across the transition; the local slope at
    // J_c grows with system size.
    auto slope_at_jc = [](int l) {
      return std::sqrt(ia::metric_finite(1.0, l) / l);
    };
    const double c = ia::cfs_path(0.0, 2.0, 1e-3, 256, true);
    CHECK(c > 0.0);
    CHECK(c < 10.0);
    CHECK(slope_at_jc(1024) > slope_at_jc(64));
  }
}

TEST_CASE("Nielsen angle complexity") {
  SUBCASE("zero at coincident couplings") {
    CHECK(ia::nielsen_angle_complexity(1.2, 1.2, 64) == doctest::Approx(0.0));
  }
  SUBCASE("Taylor consistency with the metric") {
    const double j = 0.6, dj = 1e-4;
    const double cn = ia::nielsen_angle_complexity(j, j + dj, 64);
    CHECK(cn == doctest::Approx(4.0 * ia::metric_finite(j, 64) * dj * dj)
                    .epsilon(1e-4));
  }
  SUBCASE("derivative peak grows with log L") {
    // Fit peak(L) = a + b log L; near-perfect linearity expected.
    std::vector<double> logs, peaks;
    for (int l : {64, 256, 1024, 4096}) {
      double best = 0.0;
      for (double j = 0.9; j <= 1.1; j += 1e-3)
        best = std::max(best, ia::nielsen_angle_derivative(0.0, j, l) / l);
      logs.push_back(std::log(static_cast<double>(l)));
      peaks.push_back(best);
    }
    const int n = static_cast<int>(logs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int i = 0; i < n; ++i) {
      sx += logs[i]; sy += peaks[i];
      sxx += logs[i] * logs[i]; sxy += logs[i] * peaks[i];
    }
    const double b = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    const double a = (sy - b * sx) / n;
    double ss_res = 0, ss_tot = 0;
    for (int i = 0; i < n; ++i) {
      const double r = peaks[i] - (a + b * logs[i]);
      ss_res += r * r;
      ss_tot += (peaks[i] - sy / n) * (peaks[i] - sy / n);
    }
    CHECK(b > 0.0);
    CHECK(1.0 - ss_res / ss_tot > 0.99);
  }
}

TEST_CASE("free-fermion ground energy at the critical point") {
  // E0(J=1)/L approaches -4/pi for the +X field convention.
  const double e = ia::ground_energy(1.0, 2048) / 2048.0;
  CHECK(e == doctest::Approx(-4.0 / std::numbers::pi).epsilon(1e-5));
}

TEST_SUITE_END();
