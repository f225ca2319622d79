#include "eee/geometry.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace eee {

using namespace layout;

namespace {

constexpr double u_low(int a) { return a == 0 ? 1.0 : 0.0; }

template <std::size_t N>
double max_abs(const std::array<double, N>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

// Inputs of the Friedrich tensor; F is linear in them.
struct FriedrichInputs {
  Mat4 E{}, B{};
  double rho = 0, p = 0;
};

// F^a_bcd = W^a_bcd - 1/2 (delta^a_c S_db - delta^a_d S_cb).
FrameTensor<4> friedrich_tensor(const FriedrichInputs& in, double kappa) {
  FrameTensor<4> W = weyl_from_eb(in.E, in.B);
  const Mat4 S = schouten(in.rho, in.p, kappa);
  FrameTensor<4> F{};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          double v = eta(a) * W[idx4(a, b, c, d)];
          if (a == c) v -= 0.5 * S[d][b];
          if (a == d) v += 0.5 * S[c][b];
          F[idx4(a, b, c, d)] = v;
        }
  return F;
}

}  // namespace

FrameTensor<4> weyl_from_eb(const Mat4& E, const Mat4& B) {
  // B_xm eps^m_yz with the spatial index m raised.
  auto beps = [&](int x, int y, int z) {
    double s = 0.0;
    for (int m = 1; m <= 3; ++m) s -= B[x][m] * eps3(m, y, z);
    return s;
  };
  FrameTensor<4> W{};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          double v = 0.0;
          v += projector_lower(b, c) * E[d][a] - projector_lower(b, d) * E[c][a];
          v -= u_low(b) * (u_low(c) * E[d][a] - u_low(d) * E[c][a]);
          v -= projector_lower(a, c) * E[d][b] - projector_lower(a, d) * E[c][b];
          v += u_low(a) * (u_low(c) * E[d][b] - u_low(d) * E[c][b]);
          v -= u_low(c) * beps(d, a, b) - u_low(d) * beps(c, a, b);
          v -= u_low(a) * beps(b, c, d) - u_low(b) * beps(a, c, d);
          W[idx4(a, b, c, d)] = v;
        }
  return W;
}

void eb_from_weyl(const FrameTensor<4>& W, Mat4& E, Mat4& B) {
  E = Mat4{};
  B = Mat4{};
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) {
      E[a][b] = W[idx4(0, a, 0, b)];
      double s = 0.0;
      for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n) s += W[idx4(0, a, m, n)] * eps3_mixed(b, m, n, 0b110);
      B[a][b] = 0.5 * s;
    }
}

FrameTensor<4> weyl_dual(const FrameTensor<4>& W) {
  FrameTensor<4> D{};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          double s = 0.0;
          for (int m = 0; m < 4; ++m)
            for (int n = 0; n < 4; ++n) {
              const double e = levi_civita_mixed(c, d, m, n, 0b1100);
              if (e != 0.0) s += e * W[idx4(a, b, m, n)];
            }
          D[idx4(a, b, c, d)] = 0.5 * s;
        }
  return D;
}

FrameTensor<4> riemann(const Connection& G, const std::array<Connection, 4>& dG) {
  FrameTensor<4> R{};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          double v = dG[c](d, a, b) - dG[d](c, a, b);
          for (int m = 0; m < 4; ++m) {
            v -= G(m, a, b) * (G(c, m, d) - G(d, m, c));
            v += G(c, a, m) * G(d, m, b) - G(d, a, m) * G(c, m, b);
          }
          R[idx4(a, b, c, d)] = v;
        }
  return R;
}

Mat4 schouten(double rho, double p, double kappa) {
  Mat4 S{};
  for (int a = 0; a < 4; ++a) S[a][a] = kappa * (u_low(a) * (p + rho) - metric(a, a) * rho / 3.0);
  return S;
}

std::array<StateVec, 4> frame_derivatives(const StateVec& z, const StateJet& jet) {
  const auto fr = frame_matrix(z);
  std::array<StateVec, 4> ez{};
  for (int mu = 0; mu < 4; ++mu)
    for (int i = 0; i < kStateSize; ++i)
      ez[mu][i] = fr[0][mu] * jet[0][i] + fr[1][mu] * jet[1][i] + fr[2][mu] * jet[2][i] +
                  fr[3][mu] * jet[3][i];
  return ez;
}

double PointResiduals::torsion_max() const { return max_abs(torsion); }
double PointResiduals::d_max() const { return max_abs(d); }
double PointResiduals::friedrich_max() const { return max_abs(friedrich); }
double PointResiduals::q_max() const { return max_abs(q); }
double PointResiduals::entropy_grad_max() const { return max_abs(entropy_grad); }

PointResiduals point_residuals(const StateVec& z, const StateJet& jet, const ThermoPoint& th,
                               double kappa) {
  PointResiduals res;
  const Connection G = expand_connection(z);
  const auto fr = frame_matrix(z);
  const auto ez = frame_derivatives(z, jet);
  std::array<Connection, 4> dG;
  for (int mu = 0; mu < 4; ++mu) dG[mu] = expand_connection(ez[mu]);

  // Torsion.
  Eigen::Matrix4d F;
  for (int A = 0; A < 4; ++A)
    for (int mu = 0; mu < 4; ++mu) F(A, mu) = fr[A][mu];
  const Eigen::Matrix4d fi = F.inverse();  // fi(mu, A)
  auto e_frame = [&](int al, int A, int be) {  // e_al(e^A_be)
    return be == 0 ? 0.0 : ez[al][frame(A, be)];
  };
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      double comm[4];
      for (int A = 0; A < 4; ++A) comm[A] = e_frame(a, A, b) - e_frame(b, A, a);
      for (int m = 0; m < 4; ++m) {
        double v = G(a, m, b) - G(b, m, a);
        for (int A = 0; A < 4; ++A) v -= fi(m, A) * comm[A];
        res.torsion[idx3(a, m, b)] = v;
      }
    }

  // Decomposition tensor.
  const double rho = z[kRho];
  const double p = th.p;
  const Mat4 E = weyl_matrix(z, kWeylE), B = weyl_matrix(z, kWeylB);
  const FrameTensor<4> R = riemann(G, dG);
  const FrameTensor<4> W = weyl_from_eb(E, B);
  const Mat4 S = schouten(rho, p, kappa);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          double v = R[idx4(a, b, c, d)] - eta(a) * W[idx4(a, b, c, d)];
          if (a == c) v -= 0.5 * S[d][b];
          if (a == d) v += 0.5 * S[c][b];
          v += 0.5 * (metric(b, c) * eta(a) * S[d][a] - metric(b, d) * eta(a) * S[c][a]);
          res.d[idx4(a, b, c, d)] = v;
        }

  // Friedrich divergence.
  auto dp = [&](int mu) { return th.dp_dr * ez[mu][kRestMass] + th.dp_ds * ez[mu][kEntropy]; };
  FriedrichInputs base;
  base.E = E;
  base.B = B;
  base.rho = rho;
  base.p = p;
  const FrameTensor<4> Fr = friedrich_tensor(base, kappa);
  std::array<FrameTensor<4>, 4> dF;
  for (int mu = 0; mu < 4; ++mu) {
    FriedrichInputs in;
    in.E = weyl_matrix(ez[mu], kWeylE);
    in.B = weyl_matrix(ez[mu], kWeylB);
    in.rho = ez[mu][kRho];
    in.p = dp(mu);
    dF[mu] = friedrich_tensor(in, kappa);
  }
  for (int b = 0; b < 4; ++b)
    for (int c = 0; c < 4; ++c)
      for (int d = 0; d < 4; ++d) {
        double v = 0.0;
        for (int mu = 0; mu < 4; ++mu) {
          v += dF[mu][idx4(mu, b, c, d)];
          for (int nu = 0; nu < 4; ++nu) {
            v += G(mu, mu, nu) * Fr[idx4(nu, b, c, d)];
            v -= G(mu, nu, b) * Fr[idx4(mu, nu, c, d)];
            v -= G(mu, nu, c) * Fr[idx4(mu, b, nu, d)];
            v -= G(mu, nu, d) * Fr[idx4(mu, b, c, nu)];
          }
        }
        res.friedrich[idx3(b, c, d)] = v;
      }

  // Euler residual.
  const double hpr = p + rho;
  double theta = 0.0;
  for (int m = 1; m <= 3; ++m) theta += G(m, m, 0);
  for (int al = 0; al < 4; ++al) {
    double v = hpr * eta(al) * G(0, al, 0) - dp(al);
    if (al == 0) v -= th.nu2 * hpr * theta;
    res.q[al] = v;
  }

  for (int al = 0; al < 4; ++al) res.entropy_grad[al] = z[entropy_grad(al)] - ez[al][kEntropy];
  res.trace_e = E[1][1] + E[2][2] + E[3][3];
  res.trace_b = B[1][1] + B[2][2] + B[3][3];
  res.rho_eos = rho - th.rho;
  return res;
}

}  // namespace eee
