#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "eee/config.hpp"
#include "eee/diagnostics.hpp"
#include "eee/initial_data.hpp"
#include "eee/reduced_rhs.hpp"
#include "eee/runner.hpp"

namespace {

struct Flags {
  std::string config;
  std::optional<std::string> scenario, out;
  std::optional<int> n, fd_order;
  std::optional<double> cfl, t_final, ko, kappa;
};

void add_flags(CLI::App* app, Flags& f) {
  app->add_option("--config", f.config, "Sectioned key = value config file");
  app->add_option("--scenario", f.scenario, "minkowski | flrw | perturbed_flrw | boosted_uniform");
  app->add_option("--n", f.n, "Grid points per axis");
  app->add_option("--cfl", f.cfl, "Courant number in (0, 1]");
  app->add_option("--t-final", f.t_final, "Final time");
  app->add_option("--fd-order", f.fd_order, "Finite-difference order (2 or 4)");
  app->add_option("--ko", f.ko, "Kreiss-Oliger strength in [0, 0.5]");
  app->add_option("--kappa", f.kappa, "Coupling constant");
  app->add_option("--out", f.out, "Output directory");
}

eee::RunConfig resolve(const Flags& f) {
  eee::RunConfig cfg = f.config.empty() ? eee::RunConfig{} : eee::parse_config_file(f.config);
  std::map<std::string, std::string> m;
  auto num = [](double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return std::string(buf);
  };
  if (f.scenario) m["run.scenario"] = *f.scenario;
  if (f.out) m["run.out"] = *f.out;
  if (f.n) m["grid.n"] = std::to_string(*f.n);
  if (f.fd_order) m["grid.fd_order"] = std::to_string(*f.fd_order);
  if (f.cfl) m["run.cfl"] = num(*f.cfl);
  if (f.t_final) m["run.t_final"] = num(*f.t_final);
  if (f.ko) m["physics.ko"] = num(*f.ko);
  if (f.kappa) m["physics.kappa"] = num(*f.kappa);
  eee::apply_overrides(cfg, m);
  return cfg;
}

int report(const eee::RunResult& r) {
  if (r.exit_code != eee::kExitOk) std::cerr << "error: " << r.status << ": " << r.message << "\n";
  else std::cout << "completed " << r.steps << " steps in " << r.wall_seconds << " s\n";
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reduced Einstein-Euler-Entropy evolution"};
  app.require_subcommand(1);
  Flags run_f, sweep_f, check_f, speeds_f;
  std::string resolutions = "16,32,64";
  std::vector<double> direction = {1.0, 0.0, 0.0};
  std::size_t point = 0;

  auto* run = app.add_subcommand("run", "Evolve one configuration");
  add_flags(run, run_f);
  auto* sweep = app.add_subcommand("sweep", "Evolve several resolutions and report convergence orders");
  add_flags(sweep, sweep_f);
  sweep->add_option("--resolutions", resolutions, "Comma-separated grid sizes");
  auto* check = app.add_subcommand("check-initial-data", "Build t = 0 data and report its residuals");
  add_flags(check, check_f);
  auto* speeds = app.add_subcommand("speeds", "Characteristic speeds of the t = 0 state at one point");
  add_flags(speeds, speeds_f);
  speeds->add_option("--direction", direction, "Spatial covector (normalized)")->expected(3);
  speeds->add_option("--point", point, "Grid point index");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return report(eee::run_simulation(resolve(run_f)));

    if (*sweep) {
      const eee::RunConfig cfg = resolve(sweep_f);
      std::vector<int> ns;
      std::stringstream ss(resolutions);
      for (std::string tok; std::getline(ss, tok, ',');) ns.push_back(std::stoi(tok));
      std::vector<eee::RunResult> results;
      const auto table = eee::run_sweep(cfg, ns, &results);
      for (const auto& r : results)
        if (r.exit_code != eee::kExitOk) return report(r);
      std::printf("%-14s %6s %6s %14s %14s %8s\n", "quantity", "n_c", "n_f", "err_c", "err_f", "order");
      for (const auto& e : table)
        std::printf("%-14s %6d %6d %14.6e %14.6e %8.3f\n", e.quantity.c_str(), e.n_coarse, e.n_fine,
                    e.err_coarse, e.err_fine, e.order);
      return 0;
    }

    const eee::RunConfig cfg = resolve(*check ? check_f : speeds_f);
    const auto eos = cfg.make_eos();
    const eee::CauchyData cd = eee::make_scenario(cfg.scenario, cfg.grid, eos, cfg.kappa, cfg.scenario_params);
    eee::InitialDataReport rep;
    const eee::FieldSet fs = eee::build_reduced_initial_data(cd, &rep);

    if (*check) {
      const eee::DiagnosticRow row = eee::compute_diagnostics(fs, *eos, cfg.kappa, cfg.diag);
      std::printf("u_norm_max         %.3e\n", rep.u_norm_max);
      std::printf("lorentz_max        %.3e\n", rep.lorentz_max);
      std::printf("projection_max     %.3e\n", rep.projection_max);
      std::printf("boost_gamma_max    %.15g\n", rep.boost_gamma_max);
      std::printf("eb_trace_max       %.3e\n", rep.eb_trace_max);
      std::printf("hamiltonian_max    %.3e\n", rep.hamiltonian_max);
      std::printf("momentum_max       %.3e\n", rep.momentum_max);
      for (int q = 0; q < eee::ResidualFields::kCount; ++q)
        std::printf("linf_%-13s %.3e\n", eee::residual_name(q), row.linf[q]);
      return 0;
    }

    const double norm = std::sqrt(direction[0] * direction[0] + direction[1] * direction[1] + direction[2] * direction[2]);
    if (norm == 0.0) throw std::invalid_argument("direction must be non-zero");
    if (point >= fs.points()) throw std::invalid_argument("point index out of range");
    const auto sp = eee::characteristic_speeds(fs.point(point), *eos, cfg.kappa,
                                               {direction[0] / norm, direction[1] / norm, direction[2] / norm});
    for (double s : sp) std::printf("%.15g\n", s);
    return 0;
  } catch (const eee::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return eee::kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return eee::kExitNumerical;
  }
}
