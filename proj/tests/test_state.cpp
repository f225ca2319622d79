#include <doctest.h>

#include <random>

#include "eee/frame_algebra.hpp"
#include "eee/grid.hpp"
#include "eee/state.hpp"
#include "test_support.hpp"

using namespace eee;
using namespace eee::layout;

TEST_CASE("layout covers 52 distinct named components") {
  for (int i = 0; i < kStateSize; ++i) CHECK(component_index(component_name(i)) == i);
  CHECK(component_index("nope") == -1);
  CHECK(frame(3, 3) == 11);
  CHECK(conn_spatial(3, 2, 3) == 20);
  CHECK(lapse(3) == 23);
  CHECK(extr(3, 3) == 32);
  CHECK(weyl_b(3, 3) == 44);
  CHECK(entropy_grad(3) == 51);
}

TEST_CASE("expanded connection is metric compatible and obeys the gauge") {
  std::mt19937 rng(1);
  EntropicPolytrope eos(2.0);
  const StateVec z = test::random_state(rng, eos);
  const Connection G = expand_connection(z);
  for (int a = 0; a < 4; ++a)
    for (int c = 0; c < 4; ++c)
      for (int b = 0; b < 4; ++b) CHECK(eta(c) * G(a, c, b) == doctest::Approx(-eta(b) * G(a, b, c)));
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) CHECK(G(0, a, b) == 0.0);
  StateVec back{};
  store_connection(G, back);
  for (int i = kConnSpatial; i < kWeylE; ++i) CHECK(back[i] == z[i]);
}

TEST_CASE("induced metric of the identity frame") {
  StateVec z{};
  for (int a = 1; a <= 3; ++a) z[frame(a, a)] = 1.0;
  const InducedMetric im = induced_metric(z);
  CHECK(im.g_t_min_eig == doctest::Approx(-1.0));
  CHECK(im.g_t_max_eig == doctest::Approx(-1.0));
  z[frame(1, 1)] = 0.0;
  CHECK_THROWS_AS(induced_metric(z), std::domain_error);
}

TEST_CASE("grid indexing and finite differences") {
  Grid g(16, 2.0 * M_PI, 4);
  CHECK(g.index(-1, 0, 0) == g.index(15, 0, 0));
  int i, j, k;
  g.coords(g.index(3, 5, 7), i, j, k);
  CHECK((i == 3 && j == 5 && k == 7));
  CHECK_THROWS_AS(Grid(16, 1.0, 3), std::invalid_argument);
  CHECK_THROWS_AS(Grid(6, 1.0, 4), std::invalid_argument);

  // Fourth-order convergence of the derivative of sin.
  double err[2];
  for (int r = 0; r < 2; ++r) {
    Grid gr(16 << r, 2.0 * M_PI, 4);
    std::vector<double> f(gr.size());
    for (std::size_t p = 0; p < gr.size(); ++p) {
      gr.coords(p, i, j, k);
      f[p] = std::sin(gr.coordinate(j));
    }
    double e = 0.0;
    for (std::size_t p = 0; p < gr.size(); ++p) {
      gr.coords(p, i, j, k);
      e = std::max(e, std::abs(fd_derivative(gr, f.data(), 1, p) - std::cos(gr.coordinate(j))));
    }
    err[r] = e;
  }
  CHECK(std::log2(err[0] / err[1]) > 3.9);
}

TEST_CASE("dissipation annihilates constants and damps the highest mode") {
  for (int order : {2, 4}) {
    Grid g(8, 1.0, order);
    std::vector<double> c(g.size(), 3.0), alt(g.size());
    for (std::size_t p = 0; p < g.size(); ++p) {
      int i, j, k;
      g.coords(p, i, j, k);
      alt[p] = (i % 2) ? 1.0 : -1.0;
    }
    CHECK(ko_dissipation(g, c.data(), 0.3, 0) == doctest::Approx(0.0));
    CHECK(ko_dissipation(g, alt.data(), 0.3, 0) * alt[0] < 0.0);
  }
}
