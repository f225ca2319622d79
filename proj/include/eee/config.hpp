#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "eee/eos.hpp"
#include "eee/evolution.hpp"
#include "eee/grid.hpp"
#include "eee/scenarios.hpp"

// Sectioned key = value run configuration.
//
//   [run]       scenario, t_final, dt, cfl, diag_every, snapshot_every, out
//   [grid]      n, length, fd_order
//   [physics]   kappa, ko
//   [eos]       kind, gamma, k, c
//   [scenario]  r0, s0, amplitude, mode, beta, hubble
//   [diagnostics] hs_order, hs_patch, sample_stride
//
// Keys may also appear before any section header; they are then matched by
// name. '#' and ';' start comments.
namespace eee {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string scenario = "minkowski";
  ScenarioParams scenario_params;
  Grid grid;
  double t_final = 1.0;
  double dt = 0.0;
  double cfl = 0.25;
  int diag_every = 10;
  int snapshot_every = 0;
  std::string out = "eee-out";
  double kappa = 1.0;
  double ko = 0.0;
  std::string eos_kind = "entropic_polytrope";
  std::map<std::string, double> eos_params;
  DiagnosticOptions diag;

  // "section.key" -> value as written, for the manifest.
  std::map<std::string, std::string> values;
  // Keys set from the command line over a file value.
  std::vector<std::string> overrides;

  std::shared_ptr<const EquationOfState> make_eos() const;
  EvolutionParams evolution_params() const;
};

// Canonical "section.key" names accepted by set_config_value.
const std::vector<std::string>& config_keys();

// Sets one key (canonical or bare name). Throws ConfigError for unknown keys
// or unparsable values.
void set_config_value(RunConfig& cfg, const std::string& key, const std::string& value);

// Range checks. Throws ConfigError.
void validate_config(const RunConfig& cfg);

RunConfig parse_config_text(const std::string& text, const std::string& source = "<config>");
RunConfig parse_config_file(const std::string& path);

// Every key with its resolved value (defaults included).
std::map<std::string, std::string> resolved_values(const RunConfig& cfg);

// Applies flag values over the config; keys already set by the file are
// recorded as overrides. Validates the result.
void apply_overrides(RunConfig& cfg, const std::map<std::string, std::string>& flags);

}  // namespace eee
