#pragma once

#include <map>
#include <memory>
#include <string>

// Two-parameter equation of state rho = P(r, s) with r the rest-mass density
// and s the specific entropy. Everything else (pressure, temperature, sound
// speed and their derivatives) is derived from the partials of P.
namespace eee {

// Partial derivatives of P at a point. Subscripts name the differentiation
// variables, e.g. Prrs = d^3 P / dr^2 ds.
struct EosPartials {
  double P = 0, Pr = 0, Ps = 0, Prr = 0, Prs = 0, Pss = 0, Prrr = 0, Prrs = 0;
};

class EquationOfState {
 public:
  virtual ~EquationOfState() = default;
  virtual EosPartials partials(double r, double s) const = 0;
  virtual std::string name() const = 0;
  virtual std::map<std::string, double> parameters() const = 0;
  double rho(double r, double s) const { return partials(r, s).P; }
};

// P = r + exp(s) r^gamma / (gamma - 1), so p = exp(s) r^gamma.
class EntropicPolytrope final : public EquationOfState {
 public:
  explicit EntropicPolytrope(double gamma);
  EosPartials partials(double r, double s) const override;
  std::string name() const override { return "entropic_polytrope"; }
  std::map<std::string, double> parameters() const override { return {{"gamma", gamma_}}; }
  double gamma() const { return gamma_; }

 private:
  double gamma_;
};

// P = r + k r^gamma / (gamma - 1) with no entropy dependence.
class BarotropicPolytrope final : public EquationOfState {
 public:
  BarotropicPolytrope(double gamma, double k);
  EosPartials partials(double r, double s) const override;
  std::string name() const override { return "barotropic_polytrope"; }
  std::map<std::string, double> parameters() const override {
    return {{"gamma", gamma_}, {"k", k_}};
  }

 private:
  double gamma_, k_;
};

// P = exp(s) r^(1+c), giving p = c rho at every (r, s).
class LinearEos final : public EquationOfState {
 public:
  explicit LinearEos(double c);
  EosPartials partials(double r, double s) const override;
  std::string name() const override { return "linear"; }
  std::map<std::string, double> parameters() const override { return {{"c", c_}}; }

 private:
  double c_;
};

std::shared_ptr<const EquationOfState> make_eos(const std::string& kind,
                                                const std::map<std::string, double>& params);

// Thermodynamic state derived from P at (r, s).
struct ThermoPoint {
  double r = 0, s = 0;
  double rho = 0;          // P(r, s)
  double p = 0;            // r dP/dr - P
  double temperature = 0;  // (1/r) dP/ds
  double nu2 = 0;          // (r / (p + rho)) dp/dr
  double enthalpy = 0;     // (p + rho) / r
  double drho_dr = 0, drho_ds = 0;
  double dp_dr = 0, dp_ds = 0;
  double dnu2_dr = 0, dnu2_ds = 0;
  double d2p_drho2 = 0;  // at fixed s: (dnu2/dr) / (drho/dr)
  bool causal = false;   // nu2 <= 1, reported only
  bool positive_temperature = false;  // K > 0, needed for entropy transport
  bool admissible = false;
};

double pressure(const EquationOfState& eos, double r, double s);
double temperature(const EquationOfState& eos, double r, double s);
double sound_speed_sq(const EquationOfState& eos, double r, double s);

// Full derived state. Throws std::domain_error for r <= 0, vanishing
// enthalpy, or dP/dr = 0.
ThermoPoint thermo(const EquationOfState& eos, double r, double s);

// Admissibility predicate: r > 0, nu2 > 0, enthalpy > 0, K >= 0.
bool admissible(const ThermoPoint& t);

// Inverts rho = P(r, s) for r at fixed s by safeguarded Newton iteration.
double solve_rest_mass(const EquationOfState& eos, double rho, double s, double r_guess = 1.0);

}  // namespace eee
