#include "eee/eos.hpp"

#include <cmath>
#include <stdexcept>

namespace eee {

EntropicPolytrope::EntropicPolytrope(double gamma) : gamma_(gamma) {
  if (!(gamma > 1.0)) throw std::invalid_argument("entropic_polytrope: gamma must exceed 1");
}

EosPartials EntropicPolytrope::partials(double r, double s) const {
  const double g = gamma_;
  const double es = std::exp(s);
  const double rg = std::pow(r, g);
  const double q = es * rg / (g - 1.0);  // internal-energy part
  EosPartials d;
  d.P = r + q;
  d.Ps = q;
  d.Pss = q;
  d.Pr = 1.0 + g * q / r;
  d.Prs = g * q / r;
  d.Prr = g * (g - 1.0) * q / (r * r);
  d.Prrs = d.Prr;
  d.Prrr = g * (g - 1.0) * (g - 2.0) * q / (r * r * r);
  return d;
}

BarotropicPolytrope::BarotropicPolytrope(double gamma, double k) : gamma_(gamma), k_(k) {
  if (!(gamma > 1.0)) throw std::invalid_argument("barotropic_polytrope: gamma must exceed 1");
}

EosPartials BarotropicPolytrope::partials(double r, double) const {
  const double g = gamma_;
  const double q = k_ * std::pow(r, g) / (g - 1.0);
  EosPartials d;
  d.P = r + q;
  d.Pr = 1.0 + g * q / r;
  d.Prr = g * (g - 1.0) * q / (r * r);
  d.Prrr = g * (g - 1.0) * (g - 2.0) * q / (r * r * r);
  return d;
}

LinearEos::LinearEos(double c) : c_(c) {
  if (!(c > 0.0)) throw std::invalid_argument("linear: c must be positive");
}

EosPartials LinearEos::partials(double r, double s) const {
  const double a = 1.0 + c_;
  const double P = std::exp(s) * std::pow(r, a);
  EosPartials d;
  d.P = P;
  d.Ps = P;
  d.Pss = P;
  d.Pr = a * P / r;
  d.Prs = d.Pr;
  d.Prr = a * (a - 1.0) * P / (r * r);
  d.Prrs = d.Prr;
  d.Prrr = a * (a - 1.0) * (a - 2.0) * P / (r * r * r);
  return d;
}

std::shared_ptr<const EquationOfState> make_eos(const std::string& kind,
                                                const std::map<std::string, double>& params) {
  auto get = [&](const char* key, double fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
  };
  if (kind == "entropic_polytrope") return std::make_shared<EntropicPolytrope>(get("gamma", 2.0));
  if (kind == "barotropic_polytrope")
    return std::make_shared<BarotropicPolytrope>(get("gamma", 2.0), get("k", 1.0));
  if (kind == "linear") return std::make_shared<LinearEos>(get("c", 1.0 / 3.0));
  throw std::invalid_argument("unknown equation of state: " + kind);
}

ThermoPoint thermo(const EquationOfState& eos, double r, double s) {
  if (!(r > 0.0)) throw std::domain_error("equation of state evaluated at non-positive r");
  const EosPartials d = eos.partials(r, s);
  ThermoPoint t;
  t.r = r;
  t.s = s;
  t.rho = d.P;
  t.drho_dr = d.Pr;
  t.drho_ds = d.Ps;
  t.p = r * d.Pr - d.P;
  t.temperature = d.Ps / r;
  t.dp_dr = r * d.Prr;
  t.dp_ds = r * d.Prs - d.Ps;
  const double h = t.p + t.rho;
  if (h == 0.0) throw std::domain_error("vanishing enthalpy");
  if (d.Pr == 0.0) throw std::domain_error("dP/dr = 0: equation of state not invertible");
  t.enthalpy = h / r;
  // p + rho = r Pr, so nu2 = r^2 Prr / (r Pr) = r Prr / Pr.
  t.nu2 = r * t.dp_dr / h;
  t.dnu2_dr = (d.Prr + r * d.Prrr) / d.Pr - r * d.Prr * d.Prr / (d.Pr * d.Pr);
  t.dnu2_ds = r * d.Prrs / d.Pr - r * d.Prr * d.Prs / (d.Pr * d.Pr);
  t.d2p_drho2 = t.dnu2_dr / d.Pr;
  t.causal = t.nu2 <= 1.0;
  t.positive_temperature = t.temperature > 0.0;
  t.admissible = admissible(t);
  return t;
}

bool admissible(const ThermoPoint& t) {
  return t.r > 0.0 && t.nu2 > 0.0 && t.enthalpy > 0.0 && t.temperature >= 0.0;
}

double pressure(const EquationOfState& eos, double r, double s) { return thermo(eos, r, s).p; }
double temperature(const EquationOfState& eos, double r, double s) {
  return thermo(eos, r, s).temperature;
}
double sound_speed_sq(const EquationOfState& eos, double r, double s) {
  return thermo(eos, r, s).nu2;
}

double solve_rest_mass(const EquationOfState& eos, double rho, double s, double r_guess) {
  double r = r_guess > 0.0 ? r_guess : 1.0;
  for (int it = 0; it < 200; ++it) {
    const EosPartials d = eos.partials(r, s);
    const double f = d.P - rho;
    double step = f / d.Pr;
    while (r - step <= 0.0) step *= 0.5;
    r -= step;
    if (std::abs(step) <= 1e-15 * std::abs(r)) return r;
  }
  const double f = eos.partials(r, s).P - rho;
  if (std::abs(f) > 1e-12 * std::abs(rho)) throw std::runtime_error("solve_rest_mass: no convergence");
  return r;
}

}  // namespace eee
