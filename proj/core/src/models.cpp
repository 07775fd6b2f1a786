#include "qcc/models.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace qcc {

PauliSum build_tfi(const TfiParams& p) {
  if (p.nsites < 2) throw std::invalid_argument("build_tfi: L < 2");
  PauliSum h(p.nsites);
  const int nbonds =
      p.boundary == Boundary::Periodic ? p.nsites : p.nsites - 1;
  for (int i = 0; i < nbonds; ++i) {
    const int j = (i + 1) % p.nsites;
    if (p.coupling != 0.0)
      h.add(-p.coupling, {{i, Pauli::Z}, {j, Pauli::Z}});
  }
  for (int i = 0; i < p.nsites; ++i) h.add(1.0, {{i, Pauli::X}});
  if (p.bias != 0.0)
    for (int i = 0; i < p.nsites; ++i) h.add(p.bias, {{i, Pauli::Z}});
  h.canonicalize();
  return h;
}

PauliSum build_zzxz(const ZzxzParams& p) {
  if (p.nsites < 2) throw std::invalid_argument("build_zzxz: L < 2");
  PauliSum h(p.nsites);
  const int nbonds =
      p.boundary == Boundary::Periodic ? p.nsites : p.nsites - 1;
  for (int i = 0; i < nbonds; ++i) {
    const int j = (i + 1) % p.nsites;
    if (p.coupling != 0.0)
      h.add(p.coupling, {{i, Pauli::Z}, {j, Pauli::Z}});
  }
  for (int i = 0; i < p.nsites; ++i) {
    if (p.field_x != 0.0) h.add(p.field_x, {{i, Pauli::X}});
    if (p.field_z != 0.0) h.add(p.field_z, {{i, Pauli::Z}});
  }
  h.canonicalize();
  return h;
}

Eigen::SparseMatrix<double> build_dicke_finite(const DickeParams& p) {
  if (p.nspins < 1 || p.boson_cutoff < 1)
    throw std::invalid_argument("build_dicke_finite: invalid sizes");
  if (p.omega_cavity <= 0 || p.omega_spin <= 0)
    throw std::invalid_argument("build_dicke_finite: frequencies must be > 0");

  const double s = 0.5 * p.nspins;
  const int nspin = p.nspins + 1;   // m = -S .. S
  const int nb = p.boson_cutoff;    // n = 0 .. N_exc - 1
  const int dim = nspin * nb;
  const double gpref = p.coupling / std::sqrt(2.0 * s);

  auto idx = [nb](int mi, int n) { return mi * nb + n; };
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(static_cast<std::size_t>(dim) * 4);

  for (int mi = 0; mi < nspin; ++mi) {
    const double m = -s + mi;
    for (int n = 0; n < nb; ++n) {
      trip.emplace_back(idx(mi, n), idx(mi, n),
                        p.omega_cavity * n + p.omega_spin * m);
      // (a^dag + a)(S^+ + S^-): spin raising/lowering with boson hop.
      const double sp = std::sqrt(s * (s + 1) - m * (m + 1));  // S^+ |m>
      const double sm = std::sqrt(s * (s + 1) - m * (m - 1));  // S^- |m>
      if (mi + 1 < nspin && sp != 0.0) {
        if (n + 1 < nb)
          trip.emplace_back(idx(mi + 1, n + 1), idx(mi, n),
                            gpref * sp * std::sqrt(n + 1.0));
        if (n > 0)
          trip.emplace_back(idx(mi + 1, n - 1), idx(mi, n),
                            gpref * sp * std::sqrt(static_cast<double>(n)));
      }
      if (mi > 0 && sm != 0.0) {
        if (n + 1 < nb)
          trip.emplace_back(idx(mi - 1, n + 1), idx(mi, n),
                            gpref * sm * std::sqrt(n + 1.0));
        if (n > 0)
          trip.emplace_back(idx(mi - 1, n - 1), idx(mi, n),
                            gpref * sm * std::sqrt(static_cast<double>(n)));
      }
    }
  }
  Eigen::SparseMatrix<double> h(dim, dim);
  h.setFromTriplets(trip.begin(), trip.end());
  return h;
}

double dicke_top_level_population(const DickeParams& p, const StateVector& gs) {
  const int nb = p.boson_cutoff;
  const int nspin = p.nspins + 1;
  if (gs.size() != static_cast<Eigen::Index>(nspin) * nb)
    throw std::invalid_argument("dicke_top_level_population: dim mismatch");
  double pop = 0.0;
  for (int mi = 0; mi < nspin; ++mi) pop += std::norm(gs[mi * nb + (nb - 1)]);
  return pop;
}

}  // namespace qcc
