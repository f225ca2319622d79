#include <doctest.h>

#include "eee/diagnostics.hpp"
#include "eee/evolution.hpp"
#include "eee/initial_data.hpp"
#include "eee/reduced_rhs.hpp"
#include "eee/scenarios.hpp"

using namespace eee;
using namespace eee::layout;

namespace {

std::shared_ptr<const EquationOfState> polytrope() { return make_eos("entropic_polytrope", {{"gamma", 2.0}}); }

}  // namespace

TEST_CASE("Minkowski rest state is an exact fixed point") {
  Grid g(8, 2.0 * M_PI, 4);
  const auto eos = polytrope();
  const FieldSet fs0 = build_reduced_initial_data(make_scenario("minkowski", g, eos, 0.0, ScenarioParams{}));
  FieldSet fs = fs0;
  for (int s = 0; s < 5; ++s) fs = rk4_step(fs, 0.1, *eos, StepParams{0.0, 0.1});
  double m = 0.0;
  for (std::size_t i = 0; i < fs.raw().size(); ++i) m = std::max(m, std::abs(fs.raw()[i] - fs0.raw()[i]));
  CHECK(m <= 1e-14);
  CHECK(fs.t == doctest::Approx(0.5));
}

TEST_CASE("FLRW evolution follows the Friedmann equations") {
  Grid g(8, 2.0 * M_PI, 4);
  const auto eos = polytrope();
  FieldSet fs = build_reduced_initial_data(make_scenario("flrw", g, eos, 1.0, ScenarioParams{}));
  const double dt = 1e-2;
  // y = (rho, r, H, a^-1), RK4 on the same step.
  auto f = [](const std::array<double, 4>& y) {
    const double p = y[1] * y[1];  // pressure of the evolved rest mass, gamma = 2
    return std::array<double, 4>{-3 * y[2] * (y[0] + p), -3 * y[2] * y[1], -y[2] * y[2] - (y[0] + 3 * p) / 6,
                                 -y[2] * y[3]};
  };
  std::array<double, 4> y{2.0, 1.0, std::sqrt(2.0 / 3.0), 1.0};
  for (int s = 0; s < 20; ++s) {
    fs = rk4_step(fs, dt, *eos, StepParams{1.0, 0.0});
    auto add = [](const std::array<double, 4>& a, double h, const std::array<double, 4>& b) {
      return std::array<double, 4>{a[0] + h * b[0], a[1] + h * b[1], a[2] + h * b[2], a[3] + h * b[3]};
    };
    const auto k1 = f(y), k2 = f(add(y, dt / 2, k1)), k3 = f(add(y, dt / 2, k2)), k4 = f(add(y, dt, k3));
    for (int i = 0; i < 4; ++i) y[i] += dt / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
  }
  for (std::size_t p : {std::size_t{0}, std::size_t{100}}) {
    CHECK(fs.at(kRho, p) == doctest::Approx(y[0]).epsilon(1e-12));
    CHECK(fs.at(kRestMass, p) == doctest::Approx(y[1]).epsilon(1e-12));
    CHECK(fs.at(extr(2, 2), p) == doctest::Approx(y[2]).epsilon(1e-12));
    CHECK(fs.at(frame(3, 3), p) == doctest::Approx(y[3]).epsilon(1e-12));
  }
}

TEST_CASE("plane-wave data give a derivative independent of the transverse axes") {
  Grid g(8, 2.0 * M_PI, 4);
  const auto eos = polytrope();
  FieldSet fs = build_reduced_initial_data(make_scenario("flrw", g, eos, 1.0, ScenarioParams{}));
  for (std::size_t p = 0; p < fs.points(); ++p) {
    int i, j, k;
    g.coords(p, i, j, k);
    fs.at(weyl_e(1, 2), p) += 1e-3 * std::sin(g.coordinate(i));
    fs.at(extr(2, 3), p) += 1e-3 * std::cos(g.coordinate(i));
  }
  FieldSet dz(g);
  time_derivative(fs, *eos, 1.0, dz);
  for (std::size_t p = 0; p < fs.points(); ++p) {
    int i, j, k;
    g.coords(p, i, j, k);
    const std::size_t q = g.index(i, 0, 0);
    for (int c = 0; c < kStateSize; ++c) CHECK(dz.at(c, p) == dz.at(c, q));
  }
}

TEST_CASE("evolve lands on t_final and enforces the CFL bound") {
  Grid g(8, 2.0 * M_PI, 4);
  const auto eos = polytrope();
  const FieldSet fs = build_reduced_initial_data(make_scenario("minkowski", g, eos, 0.0, ScenarioParams{}));
  EvolutionParams ep;
  ep.step.kappa = 0.0;
  ep.t_final = 0.5;
  ep.diag_every = 0;
  long observed = 0;
  const Trajectory tr = evolve(fs, *eos, ep, [&](const FieldSet&, long) { ++observed; });
  CHECK(tr.final_state.t == 0.5);
  CHECK(observed == tr.steps + 1);
  CHECK(tr.diagnostics.size() == 2);
  ep.dt = 1.0;
  CHECK_THROWS_AS(evolve(fs, *eos, ep), std::invalid_argument);
  CHECK_THROWS_AS(rk4_step(fs, 0.1, *eos, StepParams{0.0, 0.7}), std::invalid_argument);
}

TEST_CASE("hard failures surface as exceptions") {
  Grid g(8, 2.0 * M_PI, 4);
  const auto eos = polytrope();
  FieldSet fs = build_reduced_initial_data(make_scenario("minkowski", g, eos, 0.0, ScenarioParams{}));
  FieldSet bad = fs;
  bad.at(frame(0, 1), 5) = 2.0;
  CHECK_THROWS_AS(rk4_step(bad, 0.01, *eos, StepParams{0.0, 0.0}), PositivityError);
  bad = fs;
  bad.at(extr(1, 1), 3) = NAN;
  CHECK_THROWS_AS(rk4_step(bad, 0.01, *eos, StepParams{0.0, 0.0}), std::runtime_error);
}

TEST_CASE("the momentum constraint stays flat along an inhomogeneous evolution") {
  Grid g(12, 2.0 * M_PI, 4);
  const auto eos = polytrope();
  ScenarioParams sp;
  sp.amplitude = 1e-4;
  FieldSet fs = build_reduced_initial_data(make_scenario("perturbed_flrw", g, eos, 1.0, sp));
  auto q_norm = [&](const FieldSet& s) {
    return linf_norm(residual_fields(s, *eos, 1.0).field[ResidualFields::kQ]);
  };
  const double q_start = q_norm(fs);
  for (int s = 0; s < 5; ++s) fs = rk4_step(fs, 2e-3, *eos, StepParams{1.0, 0.0});
  CHECK(std::abs(q_norm(fs) - q_start) <= 1e-9);
}
