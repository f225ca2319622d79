#pragma once

#include <string>
#include <vector>

#include "eee/config.hpp"

// Run orchestration: initial data, evolution, diagnostics CSV, snapshots and
// the run manifest.
namespace eee {

enum ExitCode : int {
  kExitOk = 0,
  kExitConfig = 1,
  kExitUnwritable = 2,
  kExitInitialData = 3,
  kExitNumerical = 4,
};

struct RunResult {
  int exit_code = kExitOk;
  std::string status = "ok";
  std::string message;
  double wall_seconds = 0;
  long steps = 0;
  std::vector<std::string> files;  // relative to the output directory
  std::vector<DiagnosticRow> diagnostics;
};

// Writes <out>/diagnostics.csv, <out>/snapshot_<step>.bin every snapshot_every
// steps (plus the initial state), and <out>/manifest.json.
RunResult run_simulation(const RunConfig& cfg);

struct ConvergenceEntry {
  std::string quantity;
  int n_coarse = 0, n_fine = 0;
  double err_coarse = 0, err_fine = 0;
  double order = 0;
};

// log(err_coarse / err_fine) / log(n_fine / n_coarse).
double observed_order(double err_coarse, double err_fine, int n_coarse, int n_fine);

// One run per resolution under <out>/n<N>, final-time L-infinity residuals
// compared between consecutive resolutions; writes <out>/convergence.csv.
std::vector<ConvergenceEntry> run_sweep(const RunConfig& base, const std::vector<int>& resolutions,
                                        std::vector<RunResult>* results = nullptr);

// Code version recorded in manifests.
const char* code_version();

}  // namespace eee
