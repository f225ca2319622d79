#pragma once

#include <string>
#include <vector>

#include "eee/eos.hpp"
#include "eee/geometry.hpp"
#include "eee/grid.hpp"

// Residual monitors, characteristic speeds and discrete uniformly local
// Sobolev norms over frozen snapshots.
namespace eee {

// Pointwise magnitudes (max over tensor components) of every residual.
struct ResidualFields {
  enum Quantity { kTorsion, kD, kFriedrich, kQ, kQ0, kEntropyGrad, kTraceE, kTraceB, kRhoEos, kCount };
  std::vector<double> field[kCount];
};

const char* residual_name(int quantity);

// Evaluates all residuals; the time derivative in the jet comes from the
// reduced system itself.
ResidualFields residual_fields(const FieldSet& fs, const EquationOfState& eos, double kappa);

// Point residuals at one grid point of a snapshot, with its time derivative dzdt.
PointResiduals residuals_at(const FieldSet& fs, const FieldSet& dzdt, std::size_t p,
                            const EquationOfState& eos, double kappa);

double linf_norm(const std::vector<double>& f);

// Speeds lambda solving (sum_A xi_A M^A - lambda M^0) v = 0 for a unit
// covector xi, sorted ascending. Throws PositivityError if M^0 is not
// positive definite and std::invalid_argument if |xi| != 1.
std::vector<double> characteristic_speeds(const StateVec& z, const EquationOfState& eos, double kappa,
                                          const std::array<double, 3>& xi);

// sup over patches of (h^3 sum_patch sum_{|alpha| <= order} |D^alpha f|^2)^(1/2).
// Patches are cubes of `patch` points starting every patch/2 points along
// each axis (periodic wrap); a patch >= n yields the single global patch.
// D^alpha are composed centered stencils of the grid's order. Throws
// std::invalid_argument if order < 0 or patch < fd_order + 1.
double ul_sobolev_norm(const Grid& g, const std::vector<double>& f, int order, int patch);

// Per-patch values of the same norm, in patch order (axis 1 fastest).
std::vector<double> ul_sobolev_patch_values(const Grid& g, const std::vector<double>& f, int order,
                                            int patch);

struct DiagnosticOptions {
  int hs_order = 1;
  int hs_patch = 0;      // 0: n / 2
  int sample_stride = 0;  // spectral diagnostics on every stride-th point per axis; 0: max(1, n / 4)
};

struct DiagnosticRow {
  double t = 0;
  double rho = 0;           // grid mean
  double hubble_trace = 0;  // grid mean of Gamma_m^0_m / 3
  double linf[ResidualFields::kCount] = {};
  double hs[ResidualFields::kCount] = {};
  double speed_min = 0, speed_max = 0;
  double m0_min_eig = 0;
  double gt_min_eig = 0, gt_max_eig = 0;
};

DiagnosticRow compute_diagnostics(const FieldSet& fs, const EquationOfState& eos, double kappa,
                                  const DiagnosticOptions& opt = {});

// Stable CSV schema.
constexpr const char* kCsvSchemaVersion = "eee-diagnostics-1";
std::string csv_header();
std::string csv_row(const DiagnosticRow& row);

}  // namespace eee
