#include "eee/reduced_rhs.hpp"

#include <cmath>
#include <sstream>

#include "eee/frame_algebra.hpp"

namespace eee {

using namespace layout;

namespace {

using Mat4 = std::array<std::array<double, 4>, 4>;

// Covariant spatial derivative of a symmetric spatial tensor T with frame
// derivatives dT(m, n, a) = e_m(T_na): returns nabla_m T_na.
struct SpatialGradient {
  double v[4][4][4] = {};
};

SpatialGradient spatial_gradient(const Connection& G, const Mat4& T, const double dT[4][4][4]) {
  SpatialGradient out;
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      for (int a = 1; a <= 3; ++a) {
        double v = dT[m][n][a];
        for (int l = 1; l <= 3; ++l) v -= G(m, l, n) * T[l][a] + G(m, l, a) * T[n][l];
        out.v[m][n][a] = v;
      }
  return out;
}

// C_ab = sum_mn nabla_m T_na eps_bmn.
Mat4 curl(const SpatialGradient& g) {
  Mat4 c{};
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) {
      double v = 0.0;
      for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n) {
          const double e = eps3(b, m, n);
          if (e != 0.0) v += e * g.v[m][n][a];
        }
      c[a][b] = v;
    }
  return c;
}

}  // namespace

ThermoPoint state_thermo(const StateVec& z, const EquationOfState& eos) {
  return thermo(eos, z[kRestMass], z[kEntropy]);
}

double row_weight(int row) {
  if (row >= kWeylE && row < kRho) {
    const int k = (row - kWeylE) % 6;
    return kSymPairs[k][0] == kSymPairs[k][1] ? 1.0 : 2.0;
  }
  return 1.0;
}

StateVec equation_rows(const StateVec& z, const StateJet& jet, const ThermoPoint& th, double kappa) {
  const Connection G = expand_connection(z);
  const auto fr = frame_matrix(z);
  const Mat4 E = weyl_matrix(z, kWeylE);
  const Mat4 B = weyl_matrix(z, kWeylB);
  const StateVec& dt = jet[0];

  // e_m(X) = e^A_m d_A X for spatial m.
  auto ed = [&](int m, int X) {
    return fr[0][m] * jet[0][X] + fr[1][m] * jet[1][X] + fr[2][m] * jet[2][X] + fr[3][m] * jet[3][X];
  };

  const double rho = z[kRho], r = z[kRestMass];
  const double p = th.p, nu2 = th.nu2;
  const double hpr = p + rho;
  double theta = 0.0, trK = 0.0;
  for (int m = 1; m <= 3; ++m) {
    theta += G(m, m, 0);
    trK += G(m, 0, m);
  }
  double lap[4] = {0.0, G(0, 0, 1), G(0, 0, 2), G(0, 0, 3)};
  double sg[4];
  for (int a = 0; a < 4; ++a) sg[a] = z[entropy_grad(a)];

  StateVec rows{};

  // Frame transport.
  for (int b = 1; b <= 3; ++b)
    for (int A = 0; A < 4; ++A) {
      double v = dt[frame(A, b)];
      for (int m = 1; m <= 3; ++m) v += (G(b, m, 0) - G(0, m, b)) * fr[A][m];
      if (A == 0) v -= G(0, 0, b);
      rows[frame(A, b)] = v;
    }

  // Spatial connection.
  for (int d = 1; d <= 3; ++d)
    for (const auto& pr : kAntiPairs) {
      const int a = pr[0], b = pr[1];
      double v = dt[conn_spatial(d, a, b)];
      for (int l = 1; l <= 3; ++l) v += G(l, a, b) * G(d, l, 0);
      v += G(0, a, 0) * G(d, 0, b) - G(d, a, 0) * G(0, 0, b);
      for (int m = 1; m <= 3; ++m) v += eps3(m, a, b) * B[d][m];
      rows[conn_spatial(d, a, b)] = v;
    }

  // Fluid acceleration.
  const double ps = th.dp_ds, rs = th.drho_ds;
  for (int a = 1; a <= 3; ++a) {
    double v = dt[lapse(a)];
    for (int l = 1; l <= 3; ++l) v -= nu2 * ed(l, extr(a, l));
    for (int m = 1; m <= 3; ++m) v += lap[m] * G(a, m, 0);
    v -= th.dnu2_ds * theta * sg[a];
    v += (1.0 / hpr) * (1.0 + (r / nu2) * th.dnu2_dr) * ps * theta * sg[a];
    v += (hpr / nu2 * th.d2p_drho2 - nu2) * theta * lap[a];
    double br = 0.0;
    for (int mu = 0; mu < 4; ++mu)
      for (int l = 1; l <= 3; ++l) {
        br += G(mu, l, 0) * (G(a, mu, l) - G(l, mu, a));
        br -= G(a, l, mu) * G(l, mu, 0);
        br += G(l, l, mu) * G(a, mu, 0);
      }
    v -= nu2 * br;
    v -= (1.0 / hpr) * nu2 * rs * theta * sg[a];
    rows[lapse(a)] = v;
  }

  // Extrinsic connection.
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) {
      double v = nu2 * dt[extr(a, b)] - nu2 * ed(b, lapse(a)) - nu2 * E[a][b];
      double br = 0.0;
      for (int mu = 0; mu < 4; ++mu) br += G(mu, 0, b) * (G(0, mu, a) - G(a, mu, 0));
      for (int m = 1; m <= 3; ++m) {
        br -= lap[m] * G(a, m, b);
        br += lap[m] * (G(a, m, b) - G(b, m, a));
      }
      br += nu2 * theta * (G(a, 0, b) - G(b, 0, a));
      br += (1.0 / hpr) * (rs - ps / nu2) * (lap[a] * sg[b] - lap[b] * sg[a]);
      if (a == b) br -= kappa * (rho + 3.0 * p) / 6.0;
      v -= nu2 * br;
      rows[extr(a, b)] = v;
    }

  // Bianchi equations.
  double dE[4][4][4] = {}, dB[4][4][4] = {};
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      for (int a = n; a <= 3; ++a) {
        dE[m][n][a] = dE[m][a][n] = ed(m, weyl_e(n, a));
        dB[m][n][a] = dB[m][a][n] = ed(m, weyl_b(n, a));
      }
  const Mat4 curlB = curl(spatial_gradient(G, B, dB));
  const Mat4 curlE = curl(spatial_gradient(G, E, dE));
  double trKE = 0.0, trKB = 0.0;
  for (int l = 1; l <= 3; ++l)
    for (int s = 1; s <= 3; ++s) {
      trKE += G(l, 0, s) * E[l][s];
      trKB += G(l, 0, s) * B[l][s];
    }

  for (const auto& pr : kSymPairs) {
    const int a = pr[0], b = pr[1];
    const double dab = (a == b) ? 1.0 : 0.0;
    auto sym = [&](auto f) { return 0.5 * (f(a, b) + f(b, a)); };

    double ve = dt[weyl_e(a, b)];
    double vb = dt[weyl_b(a, b)];
    for (int m = 1; m <= 3; ++m) {
      ve += E[m][b] * G(a, m, 0) + E[a][m] * G(b, m, 0);
      vb += B[m][b] * G(a, m, 0) + B[a][m] * G(b, m, 0);
    }
    ve += 0.5 * (curlB[a][b] + curlB[b][a]);
    vb -= 0.5 * (curlE[a][b] + curlE[b][a]);
    ve += 2.0 * sym([&](int x, int y) {
      double s = 0.0;
      for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n) s += lap[m] * eps3(m, n, x) * B[y][n];
      return s;
    });
    vb -= 2.0 * sym([&](int x, int y) {
      double s = 0.0;
      for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n) s += lap[m] * eps3(m, n, x) * E[y][n];
      return s;
    });
    ve -= 3.0 * sym([&](int x, int y) {
      double s = 0.0;
      for (int l = 1; l <= 3; ++l) s += G(x, 0, l) * E[y][l];
      return s;
    });
    ve -= 2.0 * sym([&](int x, int y) {
      double s = 0.0;
      for (int l = 1; l <= 3; ++l) s += G(l, 0, x) * E[y][l];
      return s;
    });
    ve += dab * trKE + 2.0 * trK * E[a][b];
    ve -= 0.25 * kappa * hpr * (G(a, 0, b) + G(b, 0, a) - (2.0 / 3.0) * dab * trK);

    vb -= 3.0 * sym([&](int x, int y) {
      double s = 0.0;
      for (int l = 1; l <= 3; ++l) s += G(x, 0, l) * B[y][l];
      return s;
    });
    vb -= 2.0 * sym([&](int x, int y) {
      double s = 0.0;
      for (int l = 1; l <= 3; ++l) s += G(l, 0, x) * B[y][l];
      return s;
    });
    vb += dab * trKB + 2.0 * trK * B[a][b];
    rows[weyl_e(a, b)] = ve;
    rows[weyl_b(a, b)] = vb;
  }

  // Matter.
  rows[kRho] = dt[kRho] + hpr * theta;
  rows[kEntropy] = dt[kEntropy];
  for (int al = 0; al < 4; ++al) {
    double v = dt[entropy_grad(al)];
    for (int mu = 0; mu < 4; ++mu) v -= (G(0, mu, al) - G(al, mu, 0)) * sg[mu];
    rows[entropy_grad(al)] = v;
  }
  rows[kRestMass] = dt[kRestMass] + r * theta;
  return rows;
}

StateVec lower_order(const StateVec& z, const ThermoPoint& th, double kappa) {
  const StateJet zero{};
  StateVec L = equation_rows(z, zero, th, kappa);
  for (int i = 0; i < kStateSize; ++i) L[i] *= row_weight(i);
  return L;
}

PrincipalMatrices assemble_principal(const StateVec& z, const EquationOfState& eos, double kappa) {
  const ThermoPoint th = state_thermo(z, eos);
  if (!(th.nu2 > 0.0)) throw std::domain_error("assemble_principal: nu2 must be positive");
  const StateJet zero{};
  const StateVec L = equation_rows(z, zero, th, kappa);
  PrincipalMatrices pm;
  for (int A = 0; A < 4; ++A) {
    for (int j = 0; j < kStateSize; ++j) {
      StateJet unit{};
      unit[A][j] = 1.0;
      const StateVec rj = equation_rows(z, unit, th, kappa);
      for (int i = 0; i < kStateSize; ++i) pm.M[A](i, j) = row_weight(i) * (rj[i] - L[i]);
    }
  }
  return pm;
}

StateVec time_derivative_point(const StateVec& z, const StateJet& jet, const ThermoPoint& th,
                               double kappa) {
  StateJet spatial = jet;
  spatial[0].fill(0.0);
  StateVec b = equation_rows(z, spatial, th, kappa);
  for (double& v : b) v = -v;

  StateVec zd = b;
  const double nu2 = th.nu2;
  double e0[4] = {0.0, z[frame(0, 1)], z[frame(0, 2)], z[frame(0, 3)]};
  const double e0sq = e0[1] * e0[1] + e0[2] * e0[2] + e0[3] * e0[3];
  const double det = 1.0 - nu2 * e0sq;
  if (!(nu2 > 0.0) || !(det > 0.0)) {
    std::ostringstream os;
    os << "M0 not positive definite in the sound-wave block (nu2=" << nu2 << ", |e0|^2=" << e0sq << ")";
    throw PositivityError(os.str(), nu2 > 0.0 ? nu2 * det : nu2);
  }
  // Sound-wave block: x_a = dGamma_0^0_a/dt, y_ab = dGamma_a^0_b/dt.
  for (int a = 1; a <= 3; ++a) {
    double num = b[lapse(a)];
    for (int l = 1; l <= 3; ++l) num += e0[l] * b[extr(a, l)];
    const double x = num / det;
    zd[lapse(a)] = x;
    for (int l = 1; l <= 3; ++l) zd[extr(a, l)] = b[extr(a, l)] / nu2 + e0[l] * x;
  }

  // E/B block, weighted to be symmetric.
  Eigen::Matrix<double, 12, 12> M = Eigen::Matrix<double, 12, 12>::Identity();
  Eigen::Matrix<double, 12, 1> rhs;
  for (int k = 0; k < 6; ++k) {
    const int a = kSymPairs[k][0], b2 = kSymPairs[k][1];
    for (int m = 1; m <= 3; ++m) {
      if (e0[m] == 0.0) continue;
      for (int n = 1; n <= 3; ++n) {
        const double c1 = 0.5 * e0[m] * eps3(b2, m, n);
        const double c2 = 0.5 * e0[m] * eps3(a, m, n);
        M(k, 6 + sym_index(n, a)) += c1;
        M(k, 6 + sym_index(n, b2)) += c2;
        M(6 + k, sym_index(n, a)) -= c1;
        M(6 + k, sym_index(n, b2)) -= c2;
      }
    }
  }
  for (int k = 0; k < 12; ++k) {
    const int row = (k < 6 ? kWeylE : kWeylB - 6) + k;
    const double w = row_weight(row);
    M.row(k) *= w;
    rhs(k) = w * b[row];
  }
  Eigen::LLT<Eigen::Matrix<double, 12, 12>> llt(M);
  if (llt.info() != Eigen::Success) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix<double, 12, 12>> es(M, Eigen::EigenvaluesOnly);
    throw PositivityError("M0 not positive definite in the E/B block", es.eigenvalues()(0));
  }
  const Eigen::Matrix<double, 12, 1> sol = llt.solve(rhs);
  for (int k = 0; k < 6; ++k) {
    zd[kWeylE + k] = sol(k);
    zd[kWeylB + k] = sol(6 + k);
  }
  return zd;
}

StateVec time_derivative_dense(const StateVec& z, const StateJet& jet, const EquationOfState& eos,
                               double kappa) {
  const PrincipalMatrices pm = assemble_principal(z, eos, kappa);
  const ThermoPoint th = state_thermo(z, eos);
  StateJet spatial = jet;
  spatial[0].fill(0.0);
  const StateVec b = equation_rows(z, spatial, th, kappa);
  Vector52 rhs;
  for (int i = 0; i < kStateSize; ++i) rhs(i) = -row_weight(i) * b[i];
  const Vector52 x = pm.M[0].fullPivLu().solve(rhs);
  StateVec out;
  for (int i = 0; i < kStateSize; ++i) out[i] = x(i);
  return out;
}

double m0_min_eigenvalue(const StateVec& z, const EquationOfState& eos, double kappa) {
  const PrincipalMatrices pm = assemble_principal(z, eos, kappa);
  Eigen::SelfAdjointEigenSolver<Matrix52> es(pm.M[0], Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

void time_derivative(const FieldSet& fs, const EquationOfState& eos, double kappa, FieldSet& out) {
  const std::size_t N = fs.points();
  std::string error;
  bool failed = false;
  bool positivity = false;
  double min_eig = 0.0;
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t ip = 0; ip < static_cast<std::ptrdiff_t>(N); ++ip) {
    bool stop;
#pragma omp atomic read
    stop = failed;
    if (stop) continue;
    const std::size_t p = static_cast<std::size_t>(ip);
    try {
      const StateVec z = fs.point(p);
      StateJet jet;
      spatial_jet(fs, p, jet);
      const ThermoPoint th = state_thermo(z, eos);
      out.set_point(p, time_derivative_point(z, jet, th, kappa));
    } catch (const std::exception& e) {
#pragma omp critical
      {
        if (!failed) {
          if (const auto* pe = dynamic_cast<const PositivityError*>(&e)) {
            positivity = true;
            min_eig = pe->min_eigenvalue;
          }
          int i, j, k;
          fs.grid().coords(p, i, j, k);
          std::ostringstream os;
          os << e.what() << " at grid point (" << i << "," << j << "," << k << "), t=" << fs.t;
          error = os.str();
          failed = true;
        }
      }
    }
  }
  if (failed) {
    if (positivity) throw PositivityError(error, min_eig);
    throw std::runtime_error(error);
  }
  out.t = fs.t;
}

}  // namespace eee
