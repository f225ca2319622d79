#include "eee/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace eee {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
  std::size_t pos = 0;
  double x = 0.0;
  try {
    x = std::stod(v, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || trim(v.substr(pos)) != "") throw ConfigError("invalid number for " + key + ": '" + v + "'");
  return x;
}

int to_int(const std::string& key, const std::string& v) {
  const double x = to_double(key, v);
  if (x != static_cast<int>(x)) throw ConfigError("invalid integer for " + key + ": '" + v + "'");
  return static_cast<int>(x);
}

std::string canonical_key(const std::string& key) {
  const auto& keys = config_keys();
  if (std::find(keys.begin(), keys.end(), key) != keys.end()) return key;
  if (key.find('.') == std::string::npos) {
    std::string found;
    for (const auto& k : keys)
      if (k.substr(k.find('.') + 1) == key) {
        if (!found.empty()) throw ConfigError("ambiguous key: " + key);
        found = k;
      }
    if (!found.empty()) return found;
  }
  throw ConfigError("unknown key: " + key);
}

}  // namespace

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = {
      "run.scenario",       "run.t_final",         "run.dt",           "run.cfl",
      "run.diag_every",     "run.snapshot_every",  "run.out",          "grid.n",
      "grid.length",        "grid.fd_order",       "physics.kappa",    "physics.ko",
      "eos.kind",           "eos.gamma",           "eos.k",            "eos.c",
      "scenario.r0",        "scenario.s0",         "scenario.amplitude", "scenario.mode",
      "scenario.beta",      "scenario.hubble",     "diagnostics.hs_order", "diagnostics.hs_patch",
      "diagnostics.sample_stride"};
  return keys;
}

void set_config_value(RunConfig& cfg, const std::string& raw_key, const std::string& raw_value) {
  const std::string key = canonical_key(raw_key);
  const std::string v = trim(raw_value);
  if (key == "run.scenario") {
    const auto& names = scenario_names();
    if (std::find(names.begin(), names.end(), v) == names.end()) throw ConfigError("unknown scenario: " + v);
    cfg.scenario = v;
  } else if (key == "run.t_final") cfg.t_final = to_double(key, v);
  else if (key == "run.dt") cfg.dt = to_double(key, v);
  else if (key == "run.cfl") cfg.cfl = to_double(key, v);
  else if (key == "run.diag_every") cfg.diag_every = to_int(key, v);
  else if (key == "run.snapshot_every") cfg.snapshot_every = to_int(key, v);
  else if (key == "run.out") cfg.out = v;
  else if (key == "grid.n") cfg.grid.n = to_int(key, v);
  else if (key == "grid.length") cfg.grid.length = to_double(key, v);
  else if (key == "grid.fd_order") cfg.grid.fd_order = to_int(key, v);
  else if (key == "physics.kappa") cfg.kappa = to_double(key, v);
  else if (key == "physics.ko") cfg.ko = to_double(key, v);
  else if (key == "eos.kind") cfg.eos_kind = v;
  else if (key == "eos.gamma" || key == "eos.k" || key == "eos.c") cfg.eos_params[key.substr(4)] = to_double(key, v);
  else if (key == "scenario.r0") cfg.scenario_params.r0 = to_double(key, v);
  else if (key == "scenario.s0") cfg.scenario_params.s0 = to_double(key, v);
  else if (key == "scenario.amplitude") cfg.scenario_params.amplitude = to_double(key, v);
  else if (key == "scenario.mode") cfg.scenario_params.mode = to_int(key, v);
  else if (key == "scenario.beta") cfg.scenario_params.beta = to_double(key, v);
  else if (key == "scenario.hubble") cfg.scenario_params.hubble = to_double(key, v);
  else if (key == "diagnostics.hs_order") cfg.diag.hs_order = to_int(key, v);
  else if (key == "diagnostics.hs_patch") cfg.diag.hs_patch = to_int(key, v);
  else if (key == "diagnostics.sample_stride") cfg.diag.sample_stride = to_int(key, v);
  cfg.values[key] = v;
}

void validate_config(const RunConfig& cfg) {
  auto fail = [](const std::string& m) { throw ConfigError(m); };
  if (!(cfg.cfl > 0.0 && cfg.cfl <= 1.0)) fail("cfl must lie in (0, 1]");
  if (!(cfg.ko >= 0.0 && cfg.ko <= 0.5)) fail("ko must lie in [0, 0.5]");
  if (!(cfg.t_final >= 0.0)) fail("t_final must be non-negative");
  if (cfg.dt < 0.0) fail("dt must be non-negative");
  if (cfg.dt > cfg.cfl * cfg.grid.h()) fail("dt exceeds the CFL bound cfl*h");
  if (cfg.diag_every < 0 || cfg.snapshot_every < 0) fail("cadences must be non-negative");
  if (cfg.diag.hs_order < 0) fail("hs_order must be non-negative");
  if (cfg.out.empty()) fail("out must not be empty");
  try {
    cfg.grid.validate();
    cfg.make_eos();
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
}

std::shared_ptr<const EquationOfState> RunConfig::make_eos() const { return eee::make_eos(eos_kind, eos_params); }

EvolutionParams RunConfig::evolution_params() const {
  EvolutionParams ep;
  ep.step.kappa = kappa;
  ep.step.ko = ko;
  ep.t_final = t_final;
  ep.dt = dt;
  ep.cfl = cfl;
  ep.diag_every = diag_every;
  ep.diag = diag;
  return ep;
}

std::map<std::string, std::string> resolved_values(const RunConfig& cfg) {
  auto num = [](double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return std::string(buf);
  };
  std::map<std::string, std::string> out = {
      {"run.scenario", cfg.scenario},
      {"run.t_final", num(cfg.t_final)},
      {"run.dt", num(cfg.dt > 0.0 ? cfg.dt : cfg.cfl * cfg.grid.h())},
      {"run.cfl", num(cfg.cfl)},
      {"run.diag_every", std::to_string(cfg.diag_every)},
      {"run.snapshot_every", std::to_string(cfg.snapshot_every)},
      {"run.out", cfg.out},
      {"grid.n", std::to_string(cfg.grid.n)},
      {"grid.length", num(cfg.grid.length)},
      {"grid.fd_order", std::to_string(cfg.grid.fd_order)},
      {"physics.kappa", num(cfg.kappa)},
      {"physics.ko", num(cfg.ko)},
      {"eos.kind", cfg.eos_kind},
      {"scenario.r0", num(cfg.scenario_params.r0)},
      {"scenario.s0", num(cfg.scenario_params.s0)},
      {"scenario.amplitude", num(cfg.scenario_params.amplitude)},
      {"scenario.mode", std::to_string(cfg.scenario_params.mode)},
      {"scenario.beta", num(cfg.scenario_params.beta)},
      {"scenario.hubble", std::isnan(cfg.scenario_params.hubble) ? "solve" : num(cfg.scenario_params.hubble)},
      {"diagnostics.hs_order", std::to_string(cfg.diag.hs_order)},
      {"diagnostics.hs_patch", std::to_string(cfg.diag.hs_patch)},
      {"diagnostics.sample_stride", std::to_string(cfg.diag.sample_stride)}};
  for (const auto& [k, v] : cfg.make_eos()->parameters()) out["eos." + k] = num(v);
  return out;
}

RunConfig parse_config_text(const std::string& text, const std::string& source) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto c = line.find_first_of("#;");
    if (c != std::string::npos) line.erase(c);
    line = trim(line);
    if (line.empty()) continue;
    const std::string where = source + ":" + std::to_string(lineno) + ": ";
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(where + "malformed section header");
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(where + "expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    try {
      set_config_value(cfg, section.empty() ? key : section + "." + key, value);
    } catch (const ConfigError& e) {
      throw ConfigError(where + e.what());
    }
  }
  validate_config(cfg);
  return cfg;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot read config file: " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config_text(ss.str(), path);
}

void apply_overrides(RunConfig& cfg, const std::map<std::string, std::string>& flags) {
  for (const auto& [key, value] : flags) {
    const std::string k = canonical_key(key);
    if (cfg.values.count(k) && cfg.values[k] != trim(value)) cfg.overrides.push_back(k);
    set_config_value(cfg, k, value);
  }
  validate_config(cfg);
}

}  // namespace eee
