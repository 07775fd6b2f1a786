#include "qcc/trotter.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace qcc {

namespace {

// psi <- cos(theta) psi - i sin(theta) P psi, in place over amplitude pairs.
void rotate_term(const PauliTerm& t, double theta, StateVector& psi) {
  const double c = std::cos(theta), s = std::sin(theta);
  static const Complex iphase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const Complex pref =
      Complex(0, -s) * iphase[std::popcount(t.xmask & t.zmask) % 4];
  const std::int64_t dim = psi.size();
  const std::uint64_t x = t.xmask, z = t.zmask;
  if (x == 0) {
    for (std::int64_t b = 0; b < dim; ++b) {
      const double sign = (std::popcount(b & z) & 1) ? -1.0 : 1.0;
      psi[b] = c * psi[b] + pref * sign * psi[b];
    }
  } else {
    for (std::int64_t b = 0; b < dim; ++b) {
      const std::int64_t bx = static_cast<std::int64_t>(b ^ x);
      if (bx < b) continue;  // handle each pair once
      const double sb = (std::popcount(b & z) & 1) ? -1.0 : 1.0;
      const double sx = (std::popcount(static_cast<std::uint64_t>(bx) & z) & 1)
                            ? -1.0 : 1.0;
      const Complex pb = psi[b], px = psi[bx];
      psi[b] = c * pb + pref * sx * px;
      psi[bx] = c * px + pref * sb * pb;
    }
  }
}

}  // namespace

StateVector exp_apply(const PauliSum& h, double dt, const StateVector& psi) {
  if (psi.size() != (std::int64_t{1} << h.nsites()))
    throw std::invalid_argument("exp_apply: dim != 2^nsites");
  StateVector out = psi;
  for (const auto& t : h.terms()) rotate_term(t, dt * t.coefficient, out);
  return out;
}

StateVector trotter_step(const std::vector<PauliSum>& groups, double dt,
                         const StateVector& psi) {
  if (!std::isfinite(dt)) throw std::invalid_argument("trotter_step: bad dt");
  StateVector out = psi;
  for (const auto& g : groups) out = exp_apply(g, dt, out);
  return out;
}

}  // namespace qcc
