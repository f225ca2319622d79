#include "eee/runner.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>

#include "eee/initial_data.hpp"
#include "eee/io.hpp"
#include "eee/reduced_rhs.hpp"

namespace eee {

namespace fs = std::filesystem;

namespace {

bool directory_writable(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) return false;
  const fs::path probe = dir / ".eee-write-probe";
  {
    std::ofstream f(probe);
    if (!f || !(f << "x") || !f.flush()) return false;
  }
  fs::remove(probe, ec);
  return true;
}

nlohmann::json manifest(const RunConfig& cfg, const RunResult& res, const InitialDataReport* rep) {
  nlohmann::json j;
  j["code_version"] = code_version();
  j["config"] = resolved_values(cfg);
  j["config_file_values"] = cfg.values;
  j["overrides"] = cfg.overrides;
  j["grid"] = {{"n", cfg.grid.n}, {"length", cfg.grid.length}, {"h", cfg.grid.h()}, {"fd_order", cfg.grid.fd_order}};
  const auto eos = cfg.make_eos();
  j["eos"] = {{"kind", eos->name()}, {"parameters", eos->parameters()}};
  j["csv_schema"] = {{"version", kCsvSchemaVersion}, {"columns", csv_header()}};
  j["wall_seconds"] = res.wall_seconds;
  j["steps"] = res.steps;
  j["exit_status"] = res.exit_code;
  j["status"] = res.status;
  if (!res.message.empty()) j["message"] = res.message;
  j["files"] = res.files;
  if (rep)
    j["initial_data"] = {{"u_norm_max", rep->u_norm_max},
                         {"lorentz_max", rep->lorentz_max},
                         {"projection_max", rep->projection_max},
                         {"boost_gamma_max", rep->boost_gamma_max},
                         {"gauge_max", rep->gauge_max},
                         {"eb_trace_max", rep->eb_trace_max},
                         {"hamiltonian_max", rep->hamiltonian_max},
                         {"momentum_max", rep->momentum_max}};
  return j;
}

std::string snapshot_name(long step) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "snapshot_%06ld.bin", step);
  return buf;
}

}  // namespace

const char* code_version() { return "eee 1.0.0"; }

RunResult run_simulation(const RunConfig& cfg) {
  RunResult res;
  const auto t0 = std::chrono::steady_clock::now();
  const fs::path out(cfg.out);
  if (!directory_writable(out)) {
    res.exit_code = kExitUnwritable;
    res.status = "output_unwritable";
    res.message = "output directory not writable: " + cfg.out;
    return res;
  }
  InitialDataReport rep;
  bool have_rep = false;
  auto finish = [&] {
    res.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    res.files.push_back("manifest.json");
    write_file_atomic((out / "manifest.json").string(), manifest(cfg, res, have_rep ? &rep : nullptr).dump(2) + "\n");
    return res;
  };

  const auto eos = cfg.make_eos();
  FieldSet initial;
  try {
    const CauchyData cd = make_scenario(cfg.scenario, cfg.grid, eos, cfg.kappa, cfg.scenario_params);
    initial = build_reduced_initial_data(cd, &rep);
    have_rep = true;
  } catch (const std::exception& e) {
    res.exit_code = kExitInitialData;
    res.status = "initial_data_error";
    res.message = e.what();
    return finish();
  }

  const std::string csv_path = (out / "diagnostics.csv").string();
  std::ofstream csv(csv_path);
  if (!csv) {
    res.exit_code = kExitUnwritable;
    res.status = "output_unwritable";
    res.message = "cannot write " + csv_path;
    return res;
  }
  csv << csv_header() << '\n';
  res.files.push_back("diagnostics.csv");

  auto observer = [&](const FieldSet& s, long step) {
    if (cfg.snapshot_every > 0 && step % cfg.snapshot_every == 0) {
      const std::string name = snapshot_name(step);
      write_snapshot((out / name).string(), s);
      res.files.push_back(name);
    }
  };
  auto on_diag = [&](const DiagnosticRow& row) { csv << csv_row(row) << '\n' << std::flush; };
  try {
    Trajectory tr = evolve(initial, *eos, cfg.evolution_params(), observer, on_diag);
    res.steps = tr.steps;
    res.diagnostics = std::move(tr.diagnostics);
  } catch (const std::exception& e) {
    res.exit_code = kExitNumerical;
    res.status = "numerical_failure";
    res.message = e.what();
  }
  csv.close();
  return finish();
}

double observed_order(double err_coarse, double err_fine, int n_coarse, int n_fine) {
  return std::log(err_coarse / err_fine) / std::log(static_cast<double>(n_fine) / n_coarse);
}

std::vector<ConvergenceEntry> run_sweep(const RunConfig& base, const std::vector<int>& resolutions,
                                        std::vector<RunResult>* results) {
  std::vector<RunResult> runs;
  for (int n : resolutions) {
    RunConfig cfg = base;
    cfg.grid.n = n;
    cfg.out = (fs::path(base.out) / ("n" + std::to_string(n))).string();
    validate_config(cfg);
    runs.push_back(run_simulation(cfg));
    if (runs.back().exit_code != kExitOk) break;
  }
  std::vector<ConvergenceEntry> table;
  for (std::size_t i = 0; i + 1 < runs.size(); ++i) {
    if (runs[i].diagnostics.empty() || runs[i + 1].diagnostics.empty()) continue;
    const DiagnosticRow& a = runs[i].diagnostics.back();
    const DiagnosticRow& b = runs[i + 1].diagnostics.back();
    for (int q = 0; q < ResidualFields::kCount; ++q) {
      ConvergenceEntry e;
      e.quantity = residual_name(q);
      e.n_coarse = resolutions[i];
      e.n_fine = resolutions[i + 1];
      e.err_coarse = a.linf[q];
      e.err_fine = b.linf[q];
      e.order = observed_order(e.err_coarse, e.err_fine, e.n_coarse, e.n_fine);
      table.push_back(e);
    }
  }
  if (directory_writable(base.out)) {
    std::string text = "quantity,n_coarse,n_fine,err_coarse,err_fine,order\n";
    char buf[160];
    for (const auto& e : table) {
      std::snprintf(buf, sizeof buf, "%s,%d,%d,%.17g,%.17g,%.6f\n", e.quantity.c_str(), e.n_coarse, e.n_fine,
                    e.err_coarse, e.err_fine, e.order);
      text += buf;
    }
    write_file_atomic((fs::path(base.out) / "convergence.csv").string(), text);
  }
  if (results) *results = std::move(runs);
  return table;
}

}  // namespace eee
