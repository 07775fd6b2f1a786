#pragma once

#include <Eigen/SparseCore>

#include "qcc/pauli.hpp"

namespace qcc {

enum class Boundary { Periodic, Open };

struct TfiParams {
  int nsites = 2;
  double coupling = 1.0;     // J
  double field_x = 1.0;      // transverse field
  double bias = 0.0;         // epsilon, longitudinal symmetry-breaking field
  Boundary boundary = Boundary::Periodic;
};

struct ZzxzParams {
  int nsites = 2;
  double coupling = 1.0;     // J (positive: antiferromagnetic)
  double field_x = 1.0;
  double field_z = 0.75;
  Boundary boundary = Boundary::Open;
};

struct DickeParams {
  int nspins = 10;           // N; total spin S = N/2
  double omega_cavity = 1.0;
  double omega_spin = 1.0;
  double coupling = 0.0;     // lambda
  int boson_cutoff = 30;     // N_exc
};

/// H = -J sum sz_i sz_{i+1} + sum sx_i + eps sum sz_i.
PauliSum build_tfi(const TfiParams& p);

/// H = +J sum sz_i sz_{i+1} + h_x sum sx_i + h_z sum sz_i.
PauliSum build_zzxz(const ZzxzParams& p);

/// Dicke Hamiltonian on the basis |m>_S (x) |n>_boson, spin index major,
/// boson index minor; dimension (N+1) * N_exc.
/// H = w_c a^dag a + w_s S^z + lambda/sqrt(2S) (a^dag + a)(S^+ + S^-).
Eigen::SparseMatrix<double> build_dicke_finite(const DickeParams& p);

/// Fraction of ground-state weight in the top boson level; the cutoff is
/// adequate when this is below ~1e-6.
double dicke_top_level_population(const DickeParams& p, const StateVector& gs);

}  // namespace qcc
