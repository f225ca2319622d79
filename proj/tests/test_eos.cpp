#include <doctest.h>

#include <cmath>

#include "eee/eos.hpp"

using namespace eee;

namespace {

// Central-difference oracle for first and second partials of P.
void check_partials(const EquationOfState& eos, double r, double s) {
  const double h = 1e-4;
  const EosPartials d = eos.partials(r, s);
  auto P = [&](double x, double y) { return eos.partials(x, y).P; };
  auto rel = [](double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); };
  CHECK(rel(d.Pr, (P(r + h, s) - P(r - h, s)) / (2 * h)) < 1e-7);
  CHECK(rel(d.Ps, (P(r, s + h) - P(r, s - h)) / (2 * h)) < 1e-7);
  CHECK(rel(d.Prr, (P(r + h, s) - 2 * P(r, s) + P(r - h, s)) / (h * h)) < 1e-6);
  const double prs = (P(r + h, s + h) - P(r + h, s - h) - P(r - h, s + h) + P(r - h, s - h)) / (4 * h * h);
  CHECK(rel(d.Prs, prs) < 1e-6);
  auto Pr = [&](double x, double y) { return eos.partials(x, y).Pr; };
  CHECK(rel(d.Prrr, (Pr(r + h, s) - 2 * Pr(r, s) + Pr(r - h, s)) / (h * h)) < 1e-6);
}

}  // namespace

TEST_CASE("entropic polytrope closed forms") {
  EntropicPolytrope eos(2.0);
  const ThermoPoint t = thermo(eos, 1.0, 0.0);
  CHECK(t.rho == doctest::Approx(2.0));
  CHECK(t.p == doctest::Approx(1.0));
  CHECK(t.nu2 == doctest::Approx(2.0 / 3.0));
  CHECK(t.admissible);
  CHECK(t.causal);
}

TEST_CASE("partials agree with finite differences") {
  EntropicPolytrope ep(5.0 / 3.0);
  BarotropicPolytrope bp(2.0, 0.7);
  LinearEos le(0.25);
  for (double r : {0.3, 1.0, 2.5})
    for (double s : {-0.5, 0.0, 0.4}) {
      check_partials(ep, r, s);
      check_partials(bp, r, s);
      check_partials(le, r, s);
    }
}

TEST_CASE("first law identities") {
  EntropicPolytrope eos(2.0);
  for (double r : {0.5, 1.0, 3.0}) {
    const ThermoPoint t = thermo(eos, r, 0.2);
    CHECK(std::abs(t.drho_dr - (t.p + t.rho) / r) < 1e-12);
    CHECK(std::abs(t.drho_ds - r * t.temperature) < 1e-12);
  }
}

TEST_CASE("linear equation of state has p = c rho") {
  LinearEos eos(0.3);
  const ThermoPoint t = thermo(eos, 1.7, 0.4);
  CHECK(t.p == doctest::Approx(0.3 * t.rho));
  CHECK(t.nu2 == doctest::Approx(0.3));
}

TEST_CASE("rest-mass inversion") {
  EntropicPolytrope eos(2.0);
  const double rho = eos.rho(1.3, 0.1);
  CHECK(solve_rest_mass(eos, rho, 0.1) == doctest::Approx(1.3).epsilon(1e-13));
}

TEST_CASE("invalid inputs are rejected") {
  EntropicPolytrope eos(2.0);
  CHECK_THROWS_AS(thermo(eos, 0.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(thermo(eos, -1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(make_eos("ideal_gas", {}), std::invalid_argument);
  CHECK(make_eos("linear", {{"c", 0.2}})->name() == "linear");
}
