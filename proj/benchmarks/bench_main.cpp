#include <benchmark/benchmark.h>

#include "qcc/ising_analytic.hpp"
#include "qcc/models.hpp"
#include "qcc/pauli.hpp"
#include "qcc/trotter.hpp"

namespace {

qcc::StateVector random_state(int nsites) {
  const Eigen::Index dim = Eigen::Index{1} << nsites;
  qcc::StateVector psi(dim);
  std::uint64_t s = 0x9e3779b97f4a7c15ull;
  for (Eigen::Index i = 0; i < dim; ++i) {
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    const double re = static_cast<double>(s >> 11) / 9007199254740992.0 - 0.5;
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    const double im = static_cast<double>(s >> 11) / 9007199254740992.0 - 0.5;
    psi[i] = {re, im};
  }
  psi.normalize();
  return psi;
}

void bm_pauli_apply(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  qcc::TfiParams p;
  p.nsites = l;
  p.coupling = 1.0;
  const qcc::PauliSum h = qcc::build_tfi(p);
  qcc::StateVector psi = random_state(l);
  for (auto _ : state) {
    qcc::StateVector out = qcc::apply(h, psi);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetComplexityN(1 << l);
}
BENCHMARK(bm_pauli_apply)->Arg(10)->Arg(14)->Arg(18)->Complexity();

void bm_trotter_step(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  qcc::TfiParams p;
  p.nsites = l;
  p.coupling = 1.0;
  p.boundary = qcc::Boundary::Open;
  qcc::PauliSum zz(l), x(l);
  for (int i = 0; i + 1 < l; ++i)
    zz.add(-1.0, {{i, qcc::Pauli::Z}, {i + 1, qcc::Pauli::Z}});
  for (int i = 0; i < l; ++i) x.add(1.0, {{i, qcc::Pauli::X}});
  zz.canonicalize();
  x.canonicalize();
  const std::vector<qcc::PauliSum> groups{zz, x};
  qcc::StateVector psi = random_state(l);
  for (auto _ : state) {
    psi = qcc::trotter_step(groups, 0.01, psi);
    benchmark::DoNotOptimize(psi.data());
  }
}
BENCHMARK(bm_trotter_step)->Arg(10)->Arg(14)->Arg(18);

void bm_metric_finite(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  double acc = 0;
  for (auto _ : state) {
    acc += qcc::ising::metric_finite(0.95, l);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(bm_metric_finite)->Arg(512)->Arg(4096)->Arg(32768);

}  // namespace

BENCHMARK_MAIN();
