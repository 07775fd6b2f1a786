#include "qcc/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace qcc {

namespace {

inline int popcount(std::uint64_t v) { return std::popcount(v); }

// Phase exponent p (mod 4) in W(x1,z1) W(x2,z2) = i^p W(x1^x2, z1^z2).
inline int product_phase(std::uint64_t x1, std::uint64_t z1, std::uint64_t x2,
                         std::uint64_t z2) {
  int p = popcount(x1 & z1) + popcount(x2 & z2) + 2 * popcount(z1 & x2) -
          popcount((x1 ^ x2) & (z1 ^ z2));
  return ((p % 4) + 4) % 4;
}

inline bool anticommutes(std::uint64_t x1, std::uint64_t z1, std::uint64_t x2,
                         std::uint64_t z2) {
  return ((popcount(x1 & z2) + popcount(z1 & x2)) & 1) != 0;
}

inline std::uint64_t key_hash(std::uint64_t x, std::uint64_t z) {
  std::uint64_t h = x * 0x9e3779b97f4a7c15ULL;
  h ^= z + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

struct MaskKey {
  std::uint64_t x, z;
  bool operator==(const MaskKey&) const = default;
};

struct MaskKeyHash {
  std::size_t operator()(const MaskKey& k) const { return key_hash(k.x, k.z); }
};

}  // namespace

PauliTerm::PauliTerm(double coeff, const std::map<int, Pauli>& letters,
                     int nsites_in)
    : coefficient(coeff), nsites(nsites_in) {
  if (nsites_in < 1 || nsites_in > 64)
    throw std::invalid_argument("PauliTerm: nsites must be in [1, 64]");
  if (!std::isfinite(coeff))
    throw std::invalid_argument("PauliTerm: non-finite coefficient");
  for (const auto& [site, p] : letters) {
    if (site < 0 || site >= nsites_in)
      throw std::invalid_argument("PauliTerm: site out of range");
    const std::uint64_t bit = 1ULL << site;
    switch (p) {
      case Pauli::X: xmask |= bit; break;
      case Pauli::Y: xmask |= bit; zmask |= bit; break;
      case Pauli::Z: zmask |= bit; break;
    }
  }
}

std::map<int, Pauli> PauliTerm::letters() const {
  std::map<int, Pauli> out;
  for (int s = 0; s < nsites; ++s) {
    const bool x = (xmask >> s) & 1, z = (zmask >> s) & 1;
    if (x && z) out[s] = Pauli::Y;
    else if (x) out[s] = Pauli::X;
    else if (z) out[s] = Pauli::Z;
  }
  return out;
}

int PauliTerm::weight() const { return popcount(xmask | zmask); }

PauliSum::PauliSum(int nsites, std::vector<PauliTerm> terms)
    : nsites_(nsites), terms_(std::move(terms)) {
  for (auto& t : terms_) {
    if (t.nsites != nsites_)
      throw std::invalid_argument("PauliSum: mismatched nsites");
  }
  canonicalize();
}

void PauliSum::add(const PauliTerm& term) {
  if (term.nsites != nsites_)
    throw std::invalid_argument("PauliSum::add: mismatched nsites");
  terms_.push_back(term);
}

void PauliSum::add(double coeff, const std::map<int, Pauli>& letters) {
  terms_.emplace_back(coeff, letters, nsites_);
}

void PauliSum::canonicalize(double drop_tol) {
  std::unordered_map<MaskKey, double, MaskKeyHash> acc;
  acc.reserve(terms_.size());
  for (const auto& t : terms_) acc[{t.xmask, t.zmask}] += t.coefficient;
  std::vector<PauliTerm> merged;
  merged.reserve(acc.size());
  for (const auto& [k, c] : acc) {
    if (std::abs(c) <= drop_tol) continue;
    PauliTerm t;
    t.coefficient = c;
    t.xmask = k.x;
    t.zmask = k.z;
    t.nsites = nsites_;
    merged.push_back(t);
  }
  std::sort(merged.begin(), merged.end(), [](const auto& a, const auto& b) {
    return std::tie(a.xmask, a.zmask) < std::tie(b.xmask, b.zmask);
  });
  terms_ = std::move(merged);
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  if (other.nsites_ != nsites_)
    throw std::invalid_argument("PauliSum: mismatched nsites");
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  canonicalize();
  return *this;
}

PauliSum& PauliSum::operator*=(double scale) {
  for (auto& t : terms_) t.coefficient *= scale;
  return *this;
}

Eigen::MatrixXcd PauliSum::to_dense() const {
  const std::int64_t dim = std::int64_t{1} << nsites_;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  static const Complex iphase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (const auto& t : terms_) {
    const Complex pref = t.coefficient * iphase[popcount(t.xmask & t.zmask) % 4];
    for (std::int64_t b = 0; b < dim; ++b) {
      const double sign = (popcount(b & t.zmask) & 1) ? -1.0 : 1.0;
      m(b ^ t.xmask, b) += pref * sign;
    }
  }
  return m;
}

StateVector apply(const PauliSum& h, const StateVector& psi) {
  const std::int64_t dim = psi.size();
  if (dim != (std::int64_t{1} << h.nsites()))
    throw std::invalid_argument("apply: dim != 2^nsites");
  static const Complex iphase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  StateVector out = StateVector::Zero(dim);
  for (const auto& t : h.terms()) {
    const Complex pref = t.coefficient * iphase[popcount(t.xmask & t.zmask) % 4];
    const std::uint64_t x = t.xmask, z = t.zmask;
    if (x == 0) {
      for (std::int64_t b = 0; b < dim; ++b) {
        const double sign = (popcount(b & z) & 1) ? -1.0 : 1.0;
        out[b] += pref * sign * psi[b];
      }
    } else {
      for (std::int64_t b = 0; b < dim; ++b) {
        const double sign = (popcount(b & z) & 1) ? -1.0 : 1.0;
        out[b ^ x] += pref * sign * psi[b];
      }
    }
  }
  return out;
}

double expectation(const PauliSum& h, const StateVector& psi) {
  return psi.dot(apply(h, psi)).real();
}

double pauli_trace_inner(const PauliSum& a, const PauliSum& b) {
  if (a.nsites() != b.nsites())
    throw std::invalid_argument("pauli_trace_inner: mismatched nsites");
  // W(x,z)^2 = I, so only identical strings contribute, each with Tr = 2^L.
  std::unordered_map<MaskKey, double, MaskKeyHash> lut;
  lut.reserve(a.size());
  for (const auto& t : a.terms()) lut[{t.xmask, t.zmask}] += t.coefficient;
  double acc = 0.0;
  for (const auto& t : b.terms()) {
    auto it = lut.find({t.xmask, t.zmask});
    if (it != lut.end()) acc += it->second * t.coefficient;
  }
  return acc;
}

PauliSum commutator_i(const PauliSum& a, const PauliSum& b) {
  if (a.nsites() != b.nsites())
    throw std::invalid_argument("commutator_i: mismatched nsites");
  // Strings either commute or anticommute; i[Wa, Wb] = 2 i^{p+1} Wc when
  // they anticommute, and p+1 mod 4 is 0 or 2 so coefficients stay real.
  std::unordered_map<MaskKey, double, MaskKeyHash> acc;
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      if (!anticommutes(ta.xmask, ta.zmask, tb.xmask, tb.zmask)) continue;
      const int p = (product_phase(ta.xmask, ta.zmask, tb.xmask, tb.zmask) + 1) % 4;
      const double sign = (p == 0) ? 1.0 : -1.0;  // p is 0 or 2 here
      acc[{ta.xmask ^ tb.xmask, ta.zmask ^ tb.zmask}] +=
          2.0 * sign * ta.coefficient * tb.coefficient;
    }
  }
  PauliSum out(a.nsites());
  for (const auto& [k, c] : acc) {
    if (c == 0.0) continue;
    PauliTerm t;
    t.coefficient = c;
    t.xmask = k.x;
    t.zmask = k.z;
    t.nsites = a.nsites();
    out.add(t);
  }
  out.canonicalize(1e-15);
  return out;
}

bool is_commuting(const PauliSum& sum) {
  const auto& ts = sum.terms();
  for (std::size_t i = 0; i < ts.size(); ++i)
    for (std::size_t j = i + 1; j < ts.size(); ++j)
      if (anticommutes(ts[i].xmask, ts[i].zmask, ts[j].xmask, ts[j].zmask))
        return false;
  return true;
}

std::string to_string(const PauliSum& sum) {
  std::ostringstream os;
  bool first = true;
  for (const auto& t : sum.terms()) {
    if (!first) os << " + ";
    first = false;
    os << t.coefficient << "*";
    bool any = false;
    for (const auto& [site, p] : t.letters()) {
      os << (p == Pauli::X ? "X" : p == Pauli::Y ? "Y" : "Z") << site;
      any = true;
    }
    if (!any) os << "I";
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace qcc
