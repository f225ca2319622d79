#include <doctest.h>

#include <random>

#include "eee/reduced_rhs.hpp"
#include "test_support.hpp"

using namespace eee;
using namespace eee::layout;

TEST_CASE("principal matrices are symmetric and M0 is positive on random states") {
  std::mt19937 rng(11);
  EntropicPolytrope eos(2.0);
  for (int trial = 0; trial < 50; ++trial) {
    const StateVec z = test::random_state(rng, eos);
    const PrincipalMatrices pm = assemble_principal(z, eos, 1.0);
    for (int A = 0; A < 4; ++A) CHECK((pm.M[A] - pm.M[A].transpose()).cwiseAbs().maxCoeff() <= 1e-13);
    CHECK(m0_min_eigenvalue(z, eos, 1.0) > 0.0);
  }
}

TEST_CASE("Minkowski rest state: diagonal M0, zero lower order, zero time derivative") {
  EntropicPolytrope eos(2.0);
  StateVec z{};
  for (int a = 1; a <= 3; ++a) z[frame(a, a)] = 1.0;
  z[kRestMass] = 1.0;
  z[kRho] = eos.rho(1.0, 0.0);
  const PrincipalMatrices pm = assemble_principal(z, eos, 0.0);
  const Matrix52 off = pm.M[0] - Matrix52(pm.M[0].diagonal().asDiagonal());
  CHECK(off.cwiseAbs().maxCoeff() == 0.0);
  CHECK(pm.M[0](extr(1, 2), extr(1, 2)) == doctest::Approx(2.0 / 3.0));
  const ThermoPoint th = state_thermo(z, eos);
  for (double v : lower_order(z, th, 0.0)) CHECK(v == 0.0);
  StateJet jet{};
  for (double v : time_derivative_point(z, jet, th, 0.0)) CHECK(v == 0.0);
}

TEST_CASE("block solve agrees with the dense solve") {
  std::mt19937 rng(5);
  EntropicPolytrope eos(2.0);
  for (int trial = 0; trial < 20; ++trial) {
    const StateVec z = test::random_state(rng, eos);
    const StateJet jet = test::random_jet(rng);
    const StateVec a = time_derivative_point(z, jet, state_thermo(z, eos), 1.0);
    const StateVec b = time_derivative_dense(z, jet, eos, 1.0);
    double m = 0.0;
    for (int i = 0; i < kStateSize; ++i) m = std::max(m, std::abs(a[i] - b[i]));
    CHECK(m < 1e-12);
  }
}

TEST_CASE("solved derivative annihilates the full rows") {
  std::mt19937 rng(9);
  EntropicPolytrope eos(2.0);
  const StateVec z = test::random_state(rng, eos);
  StateJet jet = test::random_jet(rng);
  const ThermoPoint th = state_thermo(z, eos);
  jet[0] = time_derivative_point(z, jet, th, 1.0);
  for (double v : equation_rows(z, jet, th, 1.0)) CHECK(std::abs(v) < 1e-12);
}

TEST_CASE("entropy gradient terms enter only their documented rows") {
  EntropicPolytrope eos(2.0);
  StateVec z{};
  for (int a = 1; a <= 3; ++a) z[frame(a, a)] = 1.0;
  z[kRestMass] = 1.0;
  z[kRho] = eos.rho(1.0, 0.0);
  z[entropy_grad(2)] = 0.1;
  const StateVec l = lower_order(z, state_thermo(z, eos), 1.0);
  StateVec z0 = z;
  z0[entropy_grad(2)] = 0.0;
  const StateVec l0 = lower_order(z0, state_thermo(z0, eos), 1.0);
  for (int i = 0; i < kStateSize; ++i) {
    const bool allowed = (i >= kLapse && i < kWeylE) || i >= kEntropyGrad;
    if (!allowed) CHECK(l[i] == l0[i]);
  }
}

TEST_CASE("large frame velocity breaks positivity") {
  EntropicPolytrope eos(2.0);
  StateVec z{};
  for (int a = 1; a <= 3; ++a) z[frame(a, a)] = 1.0;
  z[frame(0, 1)] = 1.5;
  z[kRestMass] = 1.0;
  z[kRho] = eos.rho(1.0, 0.0);
  CHECK(m0_min_eigenvalue(z, eos, 1.0) <= 0.0);
  StateJet jet{};
  CHECK_THROWS_AS(time_derivative_point(z, jet, state_thermo(z, eos), 1.0), PositivityError);
}
