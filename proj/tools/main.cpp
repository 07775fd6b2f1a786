#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "qcc/adiabatic.hpp"
#include "qcc/dicke_gaussian.hpp"
#include "qcc/fs_geometry.hpp"
#include "qcc/io.hpp"
#include "qcc/ising_analytic.hpp"
#include "qcc/lanczos.hpp"
#include "qcc/models.hpp"
#include "qcc/scaling.hpp"
#include "qcc/vqe.hpp"
#include "selftest.hpp"

#include <json.hpp>

namespace {

using namespace qcc;

constexpr const char* kVersion = "qcc 0.1.0";

struct RunContext {
  std::string subcommand;
  io::RunConfig cfg;
  std::string outdir;
  int jobs = 1;
  std::vector<std::uint64_t> seeds;
  std::vector<std::string> outputs;
  std::chrono::steady_clock::time_point started =
      std::chrono::steady_clock::now();

  std::string manifest_name() const { return subcommand + "_manifest.json"; }

  std::string path(const std::string& name) const {
    return (std::filesystem::path(outdir) / name).string();
  }

  void emit(const io::Table& table, const std::string& name) {
    io::write_csv(path(name), table, manifest_name());
    outputs.push_back(name);
  }

  void finish() {
    io::Manifest m;
    m.subcommand = subcommand;
    m.config_hash = io::digest(cfg.canonical());
    m.seeds = seeds;
    m.outputs = outputs;
    m.walltime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      started)
            .count();
    m.tool_version = kVersion;
    io::write_manifest(path(manifest_name()), m, cfg);
  }
};

void parallel_for(int jobs, int n, const std::function<void(int)>& fn) {
  if (jobs <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::mutex mu;
  int next = 0;
  for (int w = 0; w < std::min(jobs, n); ++w) {
    pool.emplace_back([&] {
      for (;;) {
        int i;
        {
          std::lock_guard<std::mutex> lk(mu);
          if (next >= n) return;
          i = next++;
        }
        fn(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

std::vector<int> int_sizes(const io::RunConfig& cfg, const std::string& key,
                           const std::vector<double>& fallback,
                           bool require_even) {
  std::vector<int> out;
  for (double v : cfg.get_list(key, fallback)) {
    const int l = static_cast<int>(std::llround(v));
    if (l <= 0)
      throw io::ConfigError("field '" + key + "': sizes must be positive", 0,
                            key);
    if (require_even && l % 2 != 0)
      throw io::ConfigError("field '" + key + "': sizes must be even", 0, key);
    out.push_back(l);
  }
  return out;
}

int positive_int(const io::RunConfig& cfg, const std::string& key,
                 int fallback) {
  const int v = cfg.get_int(key, fallback);
  if (v <= 0)
    throw io::ConfigError("field '" + key + "': must be positive, got " +
                              std::to_string(v),
                          0, key);
  return v;
}

double positive_double(const io::RunConfig& cfg, const std::string& key,
                       double fallback) {
  const double v = cfg.get_double(key, fallback);
  if (v <= 0.0)
    throw io::ConfigError("field '" + key + "': must be positive", 0, key);
  return v;
}

// ---------------------------------------------------------------------------

void run_ising_fs(RunContext& ctx) {
  const auto sizes =
      int_sizes(ctx.cfg, "sizes", {128, 512, 2048, 8192}, true);
  const double j_min = ctx.cfg.get_double("j_min", 0.0);
  const double j_max = ctx.cfg.get_double("j_max", 2.0);
  const double dj = positive_double(ctx.cfg, "delta_j", 1e-3);
  const double j_ref = ctx.cfg.get_double("j_ref", j_min);

  io::Table t;
  t.columns = {"J", "L", "g_JJ_per_site", "C_FS_per_site", "dCFS_dJ",
               "C_N_angle", "dCN_dJ"};
  for (int l : sizes) {
    double cfs = 0.0, prev_speed = 0.0, prev_j = j_min;
    for (double j = j_min; j <= j_max + 0.5 * dj; j += dj) {
      const double g = ising::metric_finite(j, l) / l;
      const double speed = std::sqrt(g);
      if (j > j_min) cfs += 0.5 * (speed + prev_speed) * (j - prev_j);
      prev_speed = speed;
      prev_j = j;
      t.add_row({io::format_number(j), io::format_number(l),
                 io::format_number(g), io::format_number(cfs),
                 io::format_number(speed),
                 io::format_number(ising::nielsen_angle_complexity(j_ref, j, l)),
                 io::format_number(ising::nielsen_angle_derivative(j_ref, j, l))});
    }
  }
  ctx.emit(t, "ising_fs.csv");
}

void run_ising_nielsen(RunContext& ctx) {
  const auto sizes =
      int_sizes(ctx.cfg, "sizes", {64, 256, 1024, 4096, 8192}, true);
  const double j_min = ctx.cfg.get_double("j_min", 0.0);
  const double j_max = ctx.cfg.get_double("j_max", 2.0);
  const double dj = positive_double(ctx.cfg, "delta_j", 1e-3);
  const double j_ref = ctx.cfg.get_double("j_ref", j_min);

  io::Table t;
  t.columns = {"J", "L", "C_N_angle", "C_N_per_site", "dCN_dJ",
               "dCN_dJ_per_site"};
  io::Table peaks;
  peaks.columns = {"L", "log_L", "dCN_dJ_per_site_peak", "J_peak"};
  for (int l : sizes) {
    double best = 0.0, best_j = j_min;
    for (double j = j_min; j <= j_max + 0.5 * dj; j += dj) {
      const double cn = ising::nielsen_angle_complexity(j_ref, j, l);
      const double d = ising::nielsen_angle_derivative(j_ref, j, l);
      if (d / l > best) { best = d / l; best_j = j; }
      t.add_row({io::format_number(j), io::format_number(l),
                 io::format_number(cn), io::format_number(cn / l),
                 io::format_number(d), io::format_number(d / l)});
    }
    peaks.add_row({io::format_number(l), io::format_number(std::log(l)),
                   io::format_number(best), io::format_number(best_j)});
  }
  ctx.emit(t, "ising_nielsen.csv");
  ctx.emit(peaks, "ising_nielsen_peaks.csv");
}

StateVector dicke_ground_state(const DickeParams& p, StateVector* seed) {
  Eigen::SparseMatrix<double> h = build_dicke_finite(p);
  LinearOp op = [&h](const StateVector& v) {
    return StateVector(h.cast<Complex>() * v);
  };
  LanczosOptions opts;
  if (seed && seed->size() == h.rows()) opts.seed = *seed;
  auto res = lowest_eigenpairs(op, h.rows(), 1, opts);
  if (seed) *seed = res.pairs[0].vector;
  return res.pairs[0].vector;
}

std::vector<MetricSample> dicke_finite_metric(int nspins, int cutoff,
                                              double omega_c, double omega_s,
                                              const std::vector<double>& grid,
                                              double delta) {
  DickeParams p;
  p.nspins = nspins;
  p.boson_cutoff = cutoff;
  p.omega_cavity = omega_c;
  p.omega_spin = omega_s;
  auto seed = std::make_shared<StateVector>();
  ParamPath path;
  path.grid = grid;
  path.ground_state_provider = [p, seed](double lam) mutable {
    DickeParams q = p;
    q.coupling = lam;
    return dicke_ground_state(q, seed.get());
  };
  std::vector<MetricSample> out;
  out.reserve(grid.size());
  for (double lam : grid) out.push_back(chi_fd(path, lam, delta));
  return out;
}

void run_dicke(RunContext& ctx) {
  const auto sizes =
      int_sizes(ctx.cfg, "nspins", {10, 15, 20, 25, 30, 35, 40}, false);
  const int cutoff = positive_int(ctx.cfg, "boson_cutoff", 30);
  const double wc = positive_double(ctx.cfg, "omega_cavity", 1.0);
  const double ws = positive_double(ctx.cfg, "omega_spin", 1.0);
  const double lam_min = ctx.cfg.get_double("lambda_min", 0.0);
  const double lam_max = ctx.cfg.get_double("lambda_max", 1.0);
  const double dl = positive_double(ctx.cfg, "delta_lambda", 1e-3);
  const bool thermo = ctx.cfg.get_bool("thermo", true);
  const double lam_c = dicke::critical_coupling(wc, ws);

  std::vector<double> grid;
  for (double lam = lam_min; lam <= lam_max + 0.5 * dl; lam += dl)
    grid.push_back(lam);

  io::Table t;
  t.columns = {"lambda", "N_or_inf", "g", "sqrt_g", "phase"};
  std::vector<std::vector<MetricSample>> per_size(sizes.size());
  parallel_for(ctx.jobs, static_cast<int>(sizes.size()), [&](int i) {
    per_size[i] = dicke_finite_metric(sizes[i], cutoff, wc, ws, grid, dl);
  });
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    for (const auto& s : per_size[i]) {
      t.add_row({io::format_number(s.lambda), io::format_number(sizes[i]),
                 io::format_number(s.g), io::format_number(std::sqrt(
                     std::max(0.0, s.g))),
                 s.lambda < lam_c ? "normal" : "superradiant"});
    }
  }
  if (thermo) {
    std::vector<double> tgrid;
    for (double lam : grid)
      if (std::abs(lam - lam_c) > 2.0 * dl && lam > 2.0 * dl)
        tgrid.push_back(lam);
    for (const auto& s : dicke::dicke_metric_thermo(tgrid, wc, ws, dl)) {
      t.add_row({io::format_number(s.lambda), "inf", io::format_number(s.g),
                 io::format_number(std::sqrt(std::max(0.0, s.g))),
                 s.lambda < lam_c ? "normal" : "superradiant"});
    }
  }
  ctx.emit(t, "dicke_metric.csv");
}

std::vector<double> time_grid(const io::RunConfig& cfg, double t_min_def,
                              double t_max_def, int per_decade_def) {
  const double t_min = positive_double(cfg, "t_min", t_min_def);
  const double t_max = positive_double(cfg, "t_max", t_max_def);
  const int per_decade = positive_int(cfg, "t_per_decade", per_decade_def);
  std::vector<double> grid;
  const double step = std::pow(10.0, 1.0 / per_decade);
  for (double t = t_min; t <= t_max * (1.0 + 1e-12); t *= step)
    grid.push_back(t);
  return grid;
}

void run_adiabatic(RunContext& ctx, adiabatic::ProtocolModel model,
                   bool alt_mode) {
  using adiabatic::ProtocolParams;
  const bool zz = model == adiabatic::ProtocolModel::Zzxz;
  ProtocolParams base;
  base.model = model;
  base.nsites = positive_int(ctx.cfg, "nsites", alt_mode && zz ? 11 : 12);
  base.field_x = ctx.cfg.get_double("field_x", 1.0);
  base.field_z = ctx.cfg.get_double("field_z", 0.75);
  base.diag_stride = positive_int(ctx.cfg, "diag_stride", 10);
  if (alt_mode && !zz) base.ramp = adiabatic::TfiRamp::RampField;

  const auto targets = ctx.cfg.get_list("targets", zz ? std::vector<double>{0.5, 2.0}
                                                      : std::vector<double>{0.5, 1.5});
  const auto t_grid = time_grid(ctx.cfg, 0.5, 32.0, 8);
  const double threshold = ctx.cfg.get_double("fidelity_threshold", 0.9);

  io::Table summary;
  summary.columns = {"model", "L", "J", "T_star", "C_N", "C_N_per_site",
                     "with_cd"};
  const std::string model_name =
      alt_mode ? (zz ? "zzxz-odd" : "tfi-field-ramp") : (zz ? "zzxz" : "tfi");

  struct Cell {
    double j;
    bool with_cd;
  };
  std::vector<Cell> cells;
  for (double j : targets)
    for (bool cd : {false, true}) cells.push_back({j, cd});

  std::vector<adiabatic::MinimalTimeResult> results(cells.size());
  parallel_for(ctx.jobs, static_cast<int>(cells.size()), [&](int i) {
    ProtocolParams p = base;
    p.coupling = cells[i].j;
    p.with_cd = cells[i].with_cd;
    results[i] = adiabatic::minimal_time_scan(p, t_grid, threshold);
  });

  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto& res = results[i];
    summary.add_row(
        {model_name, io::format_number(base.nsites),
         io::format_number(cells[i].j),
         res.reached ? io::format_number(res.minimal_time) : "-1",
         res.reached ? io::format_number(res.complexity_at_minimal) : "-1",
         res.reached
             ? io::format_number(res.complexity_at_minimal / base.nsites)
             : "-1",
         cells[i].with_cd ? "1" : "0"});

    // Full trace at the minimal (or longest scanned) time.
    ProtocolParams p = base;
    p.coupling = cells[i].j;
    p.with_cd = cells[i].with_cd;
    const double t_trace = res.reached ? res.minimal_time : t_grid.back();
    auto trace = adiabatic::evolve(p, t_trace);
    io::Table tt;
    tt.columns = {"t", "lambda", "fidelity_inst", "gap"};
    for (std::size_t n = 0; n < trace.times.size(); ++n)
      tt.add_row({io::format_number(trace.times[n]),
                  io::format_number(trace.lambdas[n]),
                  io::format_number(trace.fidelity_instantaneous[n]),
                  io::format_number(trace.gaps[n])});
    std::ostringstream name;
    name << ctx.subcommand << "_trace_J" << cells[i].j
         << (cells[i].with_cd ? "_cd" : "_nocd") << ".csv";
    ctx.emit(tt, name.str());
  }
  ctx.emit(summary, ctx.subcommand + "_summary.csv");
}

void run_vqe(RunContext& ctx, bool zzxz) {
  const int l = positive_int(ctx.cfg, "nsites", 12);
  const int d_max = ctx.cfg.get_int("d_max", 8);
  if (d_max < 0)
    throw io::ConfigError("field 'd_max': must be >= 0", 0, "d_max");
  const double bias = ctx.cfg.get_double("bias", zzxz ? 0.0 : 0.001);
  const auto targets = ctx.cfg.get_list(
      "targets", zzxz ? std::vector<double>{0.5, 1.0, 1.5, 2.0, 2.5, 3.0}
                      : std::vector<double>{0.2, 0.5, 0.8, 0.9, 1.0,
                                            1.1, 1.2, 1.5, 2.0, 2.5});
  vqe::OptimizeOptions opts;
  opts.restarts = positive_int(ctx.cfg, "restarts", 4);
  opts.seed = static_cast<std::uint64_t>(ctx.cfg.get_int("seed", 1));
  opts.max_iterations = positive_int(ctx.cfg, "max_iterations", 300);
  opts.fidelity_threshold = ctx.cfg.get_double("fidelity_threshold", 0.9);
  ctx.seeds.push_back(opts.seed);

  io::Table t;
  t.columns = {"model", "L", "J", "d_converged_or_-1", "best_fidelity",
               "subspace_fidelity", "C_N", "C_N_per_site", "energy", "E_rel"};
  io::Table mag;
  mag.columns = {"J", "site", "sz_vqe", "sz_ed", "occupation_vqe"};

  std::vector<vqe::ConvergencePoint> points(targets.size());
  parallel_for(ctx.jobs, static_cast<int>(targets.size()), [&](int i) {
    PauliSum h;
    if (zzxz) {
      ZzxzParams p;
      p.nsites = l;
      p.coupling = targets[i];
      h = build_zzxz(p);
    } else {
      TfiParams p;
      p.nsites = l;
      p.coupling = targets[i];
      p.bias = bias;
      p.boundary = Boundary::Open;
      h = build_tfi(p);
    }
    points[i] = vqe::depth_scan(h, targets[i], d_max, opts);
  });

  for (std::size_t i = 0; i < targets.size(); ++i) {
    const auto& best = points[i].best;
    const double e_rel =
        best.ground_energy != 0.0
            ? std::abs(best.energy - best.ground_energy) /
                  std::abs(best.ground_energy)
            : 0.0;
    t.add_row({zzxz ? "zzxz" : "tfi", io::format_number(l),
               io::format_number(targets[i]),
               best.converged ? io::format_number(best.layers) : "-1",
               io::format_number(best.fidelity),
               io::format_number(best.subspace_fidelity),
               io::format_number(best.complexity),
               io::format_number(best.complexity / l),
               io::format_number(best.energy), io::format_number(e_rel)});

    if (zzxz) {
      ZzxzParams p;
      p.nsites = l;
      p.coupling = targets[i];
      const PauliSum h = build_zzxz(p);
      vqe::AnsatzCircuit c{l, best.layers};
      StateVector psi = vqe::apply_ansatz(c, best.theta);
      auto diag = vqe::afm_diagnostics(psi, h);
      auto gs = lowest_eigenpairs(h, 1);
      for (int s = 0; s < l; ++s) {
        PauliSum z(l);
        z.add(1.0, {{s, Pauli::Z}});
        z.canonicalize();
        mag.add_row({io::format_number(targets[i]), io::format_number(s),
                     io::format_number(diag.sz_per_site[s]),
                     io::format_number(expectation(z, gs.pairs[0].vector)),
                     io::format_number(diag.occupation_per_site[s])});
      }
    }
  }
  ctx.emit(t, ctx.subcommand + "_summary.csv");
  if (zzxz) ctx.emit(mag, ctx.subcommand + "_magnetization.csv");
}

void run_scaling_fit(RunContext& ctx) {
  const std::string mode = ctx.cfg.get_string("mode", "ising-fs");
  nlohmann::json report;
  report["mode"] = mode;

  auto fit_to_json = [](const scaling::ScalingFit& fit) {
    nlohmann::json j;
    switch (fit.law) {
      case scaling::ScalingLaw::PowerOffset: j["law"] = "power_offset"; break;
      case scaling::ScalingLaw::Position: j["law"] = "position"; break;
      case scaling::ScalingLaw::LogLinear: j["law"] = "log_linear"; break;
    }
    j["params"] = fit.params;
    j["stderr"] = fit.stderrs;
    j["r_squared"] = fit.r_squared;
    j["converged"] = fit.converged;
    return j;
  };

  if (mode == "ising-fs") {
    const auto sizes =
        int_sizes(ctx.cfg, "sizes", {128, 256, 512, 1024, 2048, 4096, 8192},
                  true);
    auto res = scaling::exponent_check_ising(
        sizes, ctx.cfg.get_double("j_min", 0.5),
        ctx.cfg.get_double("j_max", 1.5),
        positive_double(ctx.cfg, "delta_j", 1e-3));
    report["exponent"] = res.exponent;
    report["stderr"] = res.stderr_exponent;
    report["r_squared"] = res.r_squared;
    report["degenerate"] = res.degenerate;
  } else if (mode == "ising-nielsen") {
    const auto sizes =
        int_sizes(ctx.cfg, "sizes", {64, 256, 1024, 4096, 8192}, true);
    std::vector<scaling::PeakEstimate> pts;
    for (int l : sizes) {
      double best = 0.0;
      for (double j = 0.8; j <= 1.2; j += 1e-3)
        best = std::max(best,
                        ising::nielsen_angle_derivative(0.0, j, l) / l);
      scaling::PeakEstimate p;
      p.size = l;
      p.y_max = best;
      pts.push_back(p);
    }
    auto fit = scaling::fit_scaling(pts, scaling::ScalingLaw::LogLinear);
    report["fit"] = fit_to_json(fit);
  } else if (mode == "dicke") {
    const auto sizes =
        int_sizes(ctx.cfg, "nspins", {10, 15, 20, 25, 30, 35, 40}, false);
    const int cutoff = positive_int(ctx.cfg, "boson_cutoff", 30);
    const double dl = positive_double(ctx.cfg, "delta_lambda", 1e-3);
    const double lam_min = ctx.cfg.get_double("lambda_min", 0.35);
    const double lam_max = ctx.cfg.get_double("lambda_max", 0.75);
    std::vector<double> grid;
    for (double lam = lam_min; lam <= lam_max + 0.5 * dl; lam += dl)
      grid.push_back(lam);
    std::vector<scaling::PeakEstimate> peaks(sizes.size());
    parallel_for(ctx.jobs, static_cast<int>(sizes.size()), [&](int i) {
      auto samples = dicke_finite_metric(sizes[i], cutoff, 1.0, 1.0, grid, dl);
      std::vector<double> xs, ys;
      for (const auto& s : samples) {
        xs.push_back(s.lambda);
        ys.push_back(std::sqrt(std::max(0.0, s.g)));
      }
      peaks[i] = scaling::find_peak(xs, ys);
      peaks[i].size = sizes[i];
    });
    auto height = scaling::fit_scaling(peaks, scaling::ScalingLaw::PowerOffset);
    auto position = scaling::fit_scaling(peaks, scaling::ScalingLaw::Position);
    report["height_fit"] = fit_to_json(height);
    report["position_fit"] = fit_to_json(position);
    report["lambda_c_oracle"] = dicke::critical_coupling(1.0, 1.0);
  } else {
    throw io::ConfigError("field 'mode': unknown mode '" + mode + "'", 0,
                          "mode");
  }

  report["inputs_digest"] = io::digest(ctx.cfg.canonical());
  const std::string name = "scaling_fit_report.json";
  std::ofstream out(ctx.path(name));
  out << report.dump(2) << "\n";
  ctx.outputs.push_back(name);
}

int dispatch(RunContext& ctx) {
  try {
    if (ctx.subcommand == "ising-fs") run_ising_fs(ctx);
    else if (ctx.subcommand == "ising-nielsen") run_ising_nielsen(ctx);
    else if (ctx.subcommand == "dicke") run_dicke(ctx);
    else if (ctx.subcommand == "adiabatic-tfi")
      run_adiabatic(ctx, adiabatic::ProtocolModel::Tfi, false);
    else if (ctx.subcommand == "adiabatic-zzxz")
      run_adiabatic(ctx, adiabatic::ProtocolModel::Zzxz, false);
    else if (ctx.subcommand == "adiabatic-alt") {
      const std::string variant = ctx.cfg.get_string("variant", "tfi-field");
      if (variant == "tfi-field")
        run_adiabatic(ctx, adiabatic::ProtocolModel::Tfi, true);
      else if (variant == "zzxz-odd")
        run_adiabatic(ctx, adiabatic::ProtocolModel::Zzxz, true);
      else
        throw io::ConfigError("field 'variant': unknown variant '" + variant +
                                  "'",
                              0, "variant");
    } else if (ctx.subcommand == "vqe-tfi") run_vqe(ctx, false);
    else if (ctx.subcommand == "vqe-zzxz") run_vqe(ctx, true);
    else if (ctx.subcommand == "scaling-fit") run_scaling_fit(ctx);
    else {
      std::cerr << "unknown subcommand: " << ctx.subcommand << "\n";
      return 1;
    }
  } catch (const io::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }
  ctx.finish();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Batch driver for ground-state complexity sweeps"};
  app.set_version_flag("--version", kVersion);

  bool selftest = false;
  app.add_flag("--selftest", selftest, "run the oracle suite and exit");

  const std::vector<std::string> subcommands = {
      "ising-fs",  "ising-nielsen", "dicke",   "adiabatic-tfi",
      "adiabatic-zzxz", "adiabatic-alt", "vqe-tfi", "vqe-zzxz",
      "scaling-fit"};

  struct SubOpts {
    std::string config_file;
    std::string outdir;
    int jobs = 0;
    std::vector<std::string> overrides;
  };
  std::map<std::string, std::shared_ptr<SubOpts>> sub_opts;
  for (const auto& name : subcommands) {
    auto* sub = app.add_subcommand(name);
    auto opts = std::make_shared<SubOpts>();
    sub->add_option("--config", opts->config_file,
                    "key=value run-config file with [section] headers");
    sub->add_option("--out", opts->outdir, "output directory");
    sub->add_option("--jobs", opts->jobs,
                    "worker pool size (default: available parallelism)");
    sub->add_option("--set", opts->overrides,
                    "config override key=value (repeatable)");
    sub_opts[name] = opts;
  }
  app.require_subcommand(0, 1);

  CLI11_PARSE(app, argc, argv);

  if (selftest) {
    const int failures = qcc::selftest::run(std::cout);
    return failures == 0 ? 0 : 1;
  }

  for (const auto& name : subcommands) {
    if (!app.get_subcommand(name)->parsed()) continue;
    const auto& opts = *sub_opts[name];
    RunContext ctx;
    ctx.subcommand = name;
    try {
      if (!opts.config_file.empty())
        ctx.cfg = qcc::io::parse_config_file(opts.config_file);
      for (const auto& kv : opts.overrides) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) {
          std::cerr << "config error: --set expects key=value, got '" << kv
                    << "'\n";
          return 2;
        }
        ctx.cfg.set(kv.substr(0, eq), kv.substr(eq + 1));
      }
    } catch (const qcc::io::ConfigError& e) {
      std::cerr << "config error: " << e.what() << "\n";
      return 2;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
    ctx.outdir = !opts.outdir.empty()
                     ? opts.outdir
                     : ctx.cfg.get_string("output_dir",
                                          qcc::io::default_output_dir());
    std::error_code ec;
    std::filesystem::create_directories(ctx.outdir, ec);
    const unsigned hw = std::thread::hardware_concurrency();
    ctx.jobs = opts.jobs > 0 ? opts.jobs
                             : ctx.cfg.get_int("jobs", hw ? static_cast<int>(hw)
                                                          : 1);
    return dispatch(ctx);
  }

  std::cout << app.help() << "\n";
  return 0;
}
