#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "eee/initial_data.hpp"

// Closed-form Cauchy data families.
//   minkowski        flat, kappa = 0, uniform fluid at rest; exact only for kappa_const = 0
//   flrw             flat, kappa = H g0, H from the Hamiltonian constraint unless given
//   perturbed_flrw   g0 = -psi^4 delta, psi = 1 + A sin(k x^1), kappa = H g0, rho fixed by
//                    the Hamiltonian constraint, s = s0 + A (1 + sin(k x^2)); exact
//   boosted_uniform  flat, kappa = 0, uniform fluid with three-velocity beta along axis 1;
//                    exact only for kappa_const = 0
namespace eee {

struct ScenarioParams {
  double r0 = 1.0;
  double s0 = 0.0;
  double amplitude = 1e-4;
  int mode = 1;  // wavenumber k = 2 pi mode / length
  double beta = 0.3;
  double hubble = NAN;  // NaN: solve from the Hamiltonian constraint
};

const std::vector<std::string>& scenario_names();

// H with H^2 = kappa rho / 3 for a homogeneous fluid at rest.
double flrw_hubble(const EquationOfState& eos, double r0, double s0, double kappa);

// Throws std::invalid_argument for an unknown name.
CauchyData make_scenario(const std::string& name, const Grid& g,
                         std::shared_ptr<const EquationOfState> eos, double kappa,
                         const ScenarioParams& sp);

}  // namespace eee
