#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qcc {

using StateVector = Eigen::VectorXcd;
using Complex = std::complex<double>;

enum class Pauli : std::uint8_t { X, Y, Z };

/// A weighted tensor product of single-site Pauli operators (identity on all
/// other sites). Internally stored in the symplectic (xmask, zmask)
/// representation: the Hermitian string W(x,z) = i^{|x&z|} X^x Z^z, which
/// places Y on the overlap sites. Site 0 is the least-significant bit and
/// |0> is the +1 eigenstate of sigma_z.
struct PauliTerm {
  double coefficient = 0.0;
  std::uint64_t xmask = 0;
  std::uint64_t zmask = 0;
  int nsites = 0;

  PauliTerm() = default;
  PauliTerm(double coeff, const std::map<int, Pauli>& letters, int nsites);

  std::map<int, Pauli> letters() const;
  /// Number of non-identity sites.
  int weight() const;
};

/// Hermitian sum of Pauli terms with real coefficients. Canonical form:
/// no two terms share the same (xmask, zmask); zero terms dropped.
class PauliSum {
 public:
  PauliSum() = default;
  explicit PauliSum(int nsites) : nsites_(nsites) {}
  PauliSum(int nsites, std::vector<PauliTerm> terms);

  int nsites() const { return nsites_; }
  const std::vector<PauliTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  void add(const PauliTerm& term);
  void add(double coeff, const std::map<int, Pauli>& letters);

  /// Merge duplicate strings and drop negligible coefficients.
  void canonicalize(double drop_tol = 0.0);

  PauliSum& operator+=(const PauliSum& other);
  PauliSum& operator*=(double scale);
  friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
  friend PauliSum operator*(PauliSum a, double s) { return a *= s; }
  friend PauliSum operator*(double s, PauliSum a) { return a *= s; }

  /// Dense matrix representation, dim 2^nsites. Test/oracle use only.
  Eigen::MatrixXcd to_dense() const;

 private:
  int nsites_ = 0;
  std::vector<PauliTerm> terms_;
};

/// H|psi> computed term-by-term via bit manipulation; O(terms * dim).
StateVector apply(const PauliSum& h, const StateVector& psi);

/// <psi|H|psi> for Hermitian H (imaginary part discarded).
double expectation(const PauliSum& h, const StateVector& psi);

/// Tr(A B) / 2^L via Pauli orthonormality; never materializes matrices.
double pauli_trace_inner(const PauliSum& a, const PauliSum& b);

/// i[A,B] for Hermitian A, B; the result is Hermitian with real
/// coefficients. Pairwise string products with phase bookkeeping.
PauliSum commutator_i(const PauliSum& a, const PauliSum& b);

/// True if every pair of strings in the sum commutes.
bool is_commuting(const PauliSum& sum);

std::string to_string(const PauliSum& sum);

}  // namespace qcc
