#include <doctest.h>

#include <random>

#include "eee/geometry.hpp"
#include "eee/reduced_rhs.hpp"
#include "test_support.hpp"

using namespace eee;
using namespace eee::layout;

namespace {

Mat4 random_tracefree(std::mt19937& rng) {
  std::uniform_real_distribution<double> U(-1, 1);
  Mat4 m{};
  for (int a = 1; a <= 3; ++a)
    for (int b = a; b <= 3; ++b) m[a][b] = m[b][a] = U(rng);
  m[3][3] = -m[1][1] - m[2][2];
  return m;
}

}  // namespace

TEST_CASE("Weyl rebuilt from E and B round-trips and is trace-free") {
  std::mt19937 rng(2);
  const Mat4 E = random_tracefree(rng), B = random_tracefree(rng);
  const FrameTensor<4> W = weyl_from_eb(E, B);
  Mat4 E2, B2;
  eb_from_weyl(W, E2, B2);
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) {
      CHECK(E2[a][b] == doctest::Approx(E[a][b]).epsilon(1e-14));
      CHECK(B2[a][b] == doctest::Approx(B[a][b]).epsilon(1e-14));
    }
  for (int b = 0; b < 4; ++b)
    for (int d = 0; d < 4; ++d) {
      double tr = 0.0;
      for (int a = 0; a < 4; ++a) tr += eta(a) * W[idx4(a, b, a, d)];
      CHECK(std::abs(tr) < 1e-14);
    }
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          CHECK(W[idx4(a, b, c, d)] == doctest::Approx(-W[idx4(b, a, c, d)]));
          CHECK(W[idx4(a, b, c, d)] == doctest::Approx(W[idx4(c, d, a, b)]));
          const double cyc = W[idx4(a, b, c, d)] + W[idx4(a, c, d, b)] + W[idx4(a, d, b, c)];
          CHECK(std::abs(cyc) < 1e-14);
        }
}

TEST_CASE("dual Weyl swaps electric and magnetic parts") {
  std::mt19937 rng(4);
  const Mat4 E = random_tracefree(rng), B = random_tracefree(rng);
  const FrameTensor<4> D = weyl_dual(weyl_from_eb(E, B));
  Mat4 E2, B2;
  eb_from_weyl(D, E2, B2);
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) {
      CHECK(std::abs(E2[a][b]) == doctest::Approx(std::abs(B[a][b])).epsilon(1e-12));
      CHECK(std::abs(B2[a][b]) == doctest::Approx(std::abs(E[a][b])).epsilon(1e-12));
    }
}

TEST_CASE("gauge identities hold pointwise for the solved time derivative") {
  std::mt19937 rng(3);
  EntropicPolytrope eos(2.0);
  for (int trial = 0; trial < 10; ++trial) {
    const StateVec z = test::random_state(rng, eos);
    StateJet jet = test::random_jet(rng);
    const ThermoPoint th = state_thermo(z, eos);
    jet[0] = time_derivative_point(z, jet, th, 1.0);
    const PointResiduals r = point_residuals(z, jet, th, 1.0);

    CHECK(std::abs(r.q[0]) < 1e-12);
    for (int m = 0; m < 4; ++m)
      for (int b = 0; b < 4; ++b) CHECK(std::abs(r.torsion[idx3(0, m, b)]) < 1e-12);
    double d0 = 0.0, ds = 0.0;
    for (int a = 1; a <= 3; ++a)
      for (int b = 1; b <= 3; ++b) {
        for (int d = 1; d <= 3; ++d) d0 = std::max(d0, std::abs(r.d[idx4(a, b, 0, d)]));
        ds = std::max(ds, std::abs(r.d[idx4(0, a, 0, b)] + r.d[idx4(0, b, 0, a)]));
      }
    CHECK(d0 < 1e-12);
    CHECK(ds < 1e-12);

    // Symmetric trace-free parts of F_a0b and eps_b^mn F_amn.
    double FE[4][4] = {}, FB[4][4] = {};
    for (int a = 1; a <= 3; ++a)
      for (int b = 1; b <= 3; ++b) {
        FE[a][b] = r.friedrich[idx3(a, 0, b)];
        for (int m = 1; m <= 3; ++m)
          for (int n = 1; n <= 3; ++n) FB[a][b] += r.friedrich[idx3(a, m, n)] * eps3(b, m, n);
      }
    const double tE = FE[1][1] + FE[2][2] + FE[3][3], tB = FB[1][1] + FB[2][2] + FB[3][3];
    for (int a = 1; a <= 3; ++a)
      for (int b = 1; b <= 3; ++b) {
        CHECK(std::abs(0.5 * (FE[a][b] + FE[b][a]) - (a == b ? tE / 3 : 0.0)) < 1e-12);
        CHECK(std::abs(0.5 * (FB[a][b] + FB[b][a]) - (a == b ? tB / 3 : 0.0)) < 1e-12);
      }
    const double dtrE = jet[0][weyl_e(1, 1)] + jet[0][weyl_e(2, 2)] + jet[0][weyl_e(3, 3)];
    const double dtrB = jet[0][weyl_b(1, 1)] + jet[0][weyl_b(2, 2)] + jet[0][weyl_b(3, 3)];
    CHECK(std::abs(dtrE) < 1e-12);
    CHECK(std::abs(dtrB) < 1e-12);
  }
}

TEST_CASE("residuals detect a perturbed Weyl part") {
  EntropicPolytrope eos(2.0);
  StateVec z{};
  for (int a = 1; a <= 3; ++a) z[frame(a, a)] = 1.0;
  z[kRestMass] = 1.0;
  z[kRho] = eos.rho(1.0, 0.0);
  StateJet jet{};
  const ThermoPoint th = state_thermo(z, eos);
  CHECK(point_residuals(z, jet, th, 0.0).d_max() == 0.0);
  z[weyl_e(1, 1)] = 1e-3;
  z[weyl_e(2, 2)] = -1e-3;
  const double d1 = point_residuals(z, jet, th, 0.0).d_max();
  z[weyl_e(1, 1)] = 2e-3;
  z[weyl_e(2, 2)] = -2e-3;
  const double d2 = point_residuals(z, jet, th, 0.0).d_max();
  CHECK(d1 > 0.0);
  CHECK(d2 == doctest::Approx(2.0 * d1));
}
