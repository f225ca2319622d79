#include "eee/scenarios.hpp"

#include <stdexcept>

namespace eee {

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names = {"minkowski", "flrw", "perturbed_flrw", "boosted_uniform"};
  return names;
}

double flrw_hubble(const EquationOfState& eos, double r0, double s0, double kappa) {
  const double rho = eos.rho(r0, s0);
  if (kappa * rho < 0.0) throw std::domain_error("no real Hubble rate for kappa rho < 0");
  return std::sqrt(kappa * rho / 3.0);
}

CauchyData make_scenario(const std::string& name, const Grid& g,
                         std::shared_ptr<const EquationOfState> eos, double kappa,
                         const ScenarioParams& sp) {
  CauchyData cd(g, eos, kappa);
  const std::size_t N = g.size();
  for (std::size_t p = 0; p < N; ++p) {
    cd.r0[p] = sp.r0;
    cd.s0[p] = sp.s0;
  }
  if (name == "minkowski") return cd;
  if (name == "boosted_uniform") {
    const Eigen::Vector3d v = three_velocity_to_projection(Eigen::Vector3d(sp.beta, 0.0, 0.0));
    for (std::size_t p = 0; p < N; ++p) cd.v[p] = v;
    return cd;
  }
  const double H = std::isnan(sp.hubble) ? flrw_hubble(*eos, sp.r0, sp.s0, kappa) : sp.hubble;
  if (name == "flrw") {
    for (std::size_t p = 0; p < N; ++p) cd.kappa[p] = H * cd.g0[p];
    return cd;
  }
  if (name == "perturbed_flrw") {
    const double k = 2.0 * M_PI * sp.mode / g.length;
    const double A = sp.amplitude;
    const double rho0 = eos->rho(sp.r0, sp.s0);
    for (std::size_t p = 0; p < N; ++p) {
      int i, j, l;
      g.coords(p, i, j, l);
      const double x = g.coordinate(i), y = g.coordinate(j);
      double rho = rho0;
      if (kappa != 0.0) {
        const double psi = 1.0 + A * std::sin(k * x);
        cd.g0[p] = -std::pow(psi, 4) * Eigen::Matrix3d::Identity();
        rho += 4.0 * A * k * k * std::sin(k * x) / (kappa * std::pow(psi, 5));
      }
      cd.kappa[p] = H * cd.g0[p];
      cd.s0[p] = sp.s0 + A * (1.0 + std::sin(k * y));
      cd.r0[p] = solve_rest_mass(*eos, rho, cd.s0[p], sp.r0);
    }
    return cd;
  }
  throw std::invalid_argument("unknown scenario: " + name);
}

}  // namespace eee
