#include "eee/initial_data.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "eee/frame_algebra.hpp"

namespace eee {

using namespace layout;

namespace {

// Multi-component scalar fields on the grid, component-major.
struct Fields {
  std::size_t N = 0;
  int ncomp = 0;
  std::vector<double> data;
  Fields(std::size_t n, int c) : N(n), ncomp(c), data(n * static_cast<std::size_t>(c), 0.0) {}
  double& at(int c, std::size_t p) { return data[static_cast<std::size_t>(c) * N + p]; }
  double at(int c, std::size_t p) const { return data[static_cast<std::size_t>(c) * N + p]; }
  const double* comp(int c) const { return data.data() + static_cast<std::size_t>(c) * N; }
};

double deriv(const Grid& g, const Fields& f, int c, int axis, std::size_t p) {
  return fd_derivative(g, f.comp(c), axis, p);
}

Eigen::Matrix4d minkowski() { return Eigen::Vector4d(1.0, -1.0, -1.0, -1.0).asDiagonal(); }

// Christoffel symbols Gamma^A_BC of g0 at every point, stored at 9A + 3B + C.
Fields christoffels(const CauchyData& cd) {
  const Grid& g = cd.grid;
  const std::size_t N = g.size();
  Fields metric(N, 9);
  for (std::size_t p = 0; p < N; ++p)
    for (int A = 0; A < 3; ++A)
      for (int B = 0; B < 3; ++B) metric.at(3 * A + B, p) = cd.g0[p](A, B);
  Fields chr(N, 27);
  for (std::size_t p = 0; p < N; ++p) {
    double dg[3][3][3];  // dg[C][A][B] = d_C g_AB
    for (int C = 0; C < 3; ++C)
      for (int A = 0; A < 3; ++A)
        for (int B = 0; B < 3; ++B) dg[C][A][B] = deriv(g, metric, 3 * A + B, C, p);
    const Eigen::Matrix3d gi = cd.g0[p].inverse();
    for (int A = 0; A < 3; ++A)
      for (int B = 0; B < 3; ++B)
        for (int C = 0; C < 3; ++C) {
          double v = 0.0;
          for (int D = 0; D < 3; ++D) v += 0.5 * gi(A, D) * (dg[B][D][C] + dg[C][D][B] - dg[D][B][C]);
          chr.at(9 * A + 3 * B + C, p) = v;
        }
  }
  return chr;
}

// Index helpers for the 4x4 frame tensors kept per point.
constexpr int c16(int a, int b) { return 4 * a + b; }
constexpr int c64(int a, int c, int b) { return 16 * a + 4 * c + b; }

}  // namespace

CauchyData::CauchyData(const Grid& g, std::shared_ptr<const EquationOfState> e, double k)
    : grid(g),
      g0(g.size(), -Eigen::Matrix3d::Identity()),
      kappa(g.size(), Eigen::Matrix3d::Zero()),
      v(g.size(), Eigen::Vector3d::Zero()),
      r0(g.size(), 1.0),
      s0(g.size(), 0.0),
      eos(std::move(e)),
      kappa_const(k) {}

Eigen::Matrix3d orthonormal_triad(const Eigen::Matrix3d& g0) {
  const Eigen::Matrix3d h = -g0;
  Eigen::LLT<Eigen::Matrix3d> llt(h);
  if (llt.info() != Eigen::Success || (h - h.transpose()).cwiseAbs().maxCoeff() > 1e-12 * h.cwiseAbs().maxCoeff())
    throw std::domain_error("orthonormal_triad: g0 is not a negative definite symmetric matrix");
  Eigen::Matrix3d T = Eigen::Matrix3d::Zero();
  for (int i = 0; i < 3; ++i) {
    Eigen::Vector3d w = Eigen::Vector3d::Unit(i);
    for (int j = 0; j < i; ++j) w -= (w.dot(h * T.col(j))) * T.col(j);
    T.col(i) = w / std::sqrt(w.dot(h * w));
  }
  return T;
}

Eigen::Vector3d three_velocity_to_projection(const Eigen::Vector3d& beta) {
  const double b2 = beta.squaredNorm();
  if (!(b2 < 1.0)) throw std::domain_error("three-velocity must satisfy |beta| < 1");
  return beta / std::sqrt(1.0 - b2);
}

Eigen::Matrix4d boost_from_velocity(const Eigen::Vector3d& vt) {
  const double v2 = vt.squaredNorm();
  const double gam = std::sqrt(1.0 + v2);
  Eigen::Matrix4d L = Eigen::Matrix4d::Identity();
  L(0, 0) = gam;
  for (int a = 0; a < 3; ++a) {
    L(0, a + 1) = vt(a);
    L(a + 1, 0) = vt(a);
  }
  if (v2 > 0.0)
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) L(a + 1, b + 1) += (gam - 1.0) * vt(a) * vt(b) / v2;
  return L;
}

double lorentz_orthogonality_residual(const Eigen::Matrix4d& L) {
  const Eigen::Matrix4d g = minkowski();
  return (L.transpose() * g * L - g).cwiseAbs().maxCoeff();
}

Connection transform_connection(const Eigen::Matrix4d& L, const std::array<Eigen::Matrix4d, 3>& dL,
                                const Connection& Gt) {
  const Eigen::Matrix4d g = minkowski();
  const Eigen::Matrix4d Li = g * L.transpose() * g;
  Connection out;
  for (int al = 0; al < 4; ++al)
    for (int be = 0; be < 4; ++be) {
      // X^lam = Lambda^m_al e~_m(Lambda^lam_be) + Lambda^mu_al Lambda^nu_be Gt_mu^lam_nu
      double X[4];
      for (int lam = 0; lam < 4; ++lam) {
        double v = 0.0;
        for (int m = 1; m <= 3; ++m) v += L(m, al) * dL[m - 1](lam, be);
        for (int mu = 0; mu < 4; ++mu)
          for (int nu = 0; nu < 4; ++nu) v += L(mu, al) * L(nu, be) * Gt(mu, lam, nu);
        X[lam] = v;
      }
      for (int ga = 0; ga < 4; ++ga) {
        double v = 0.0;
        for (int lam = 0; lam < 4; ++lam) v += Li(ga, lam) * X[lam];
        out.g[al][ga][be] = v;
      }
    }
  return out;
}

Connection apply_fluid_gauge(const Connection& Gp, const Eigen::Matrix4d& L, const double e0[4],
                             const Eigen::Vector3d& grad_p, double nu2, double hpr) {
  const double L00 = L(0, 0);
  double omega[4][4] = {};
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) omega[a][b] = -Gp(0, a, b) / L00;
  double theta_p = 0.0;
  for (int m = 1; m <= 3; ++m) theta_p += Gp(m, m, 0) + L(0, m) * omega[m][0];
  Eigen::Matrix3d M;
  Eigen::Vector3d rhs;
  for (int a = 1; a <= 3; ++a) {
    for (int m = 1; m <= 3; ++m) M(a - 1, m - 1) = (a == m ? L00 : 0.0) - e0[a] * nu2 * L(0, m);
    rhs(a - 1) = e0[a] * nu2 * theta_p - grad_p(a - 1) / hpr - Gp(0, 0, a);
  }
  Eigen::FullPivLU<Eigen::Matrix3d> lu(M);
  if (!lu.isInvertible()) throw std::domain_error("apply_fluid_gauge: singular acceleration system");
  const Eigen::Vector3d bst = lu.solve(rhs);
  for (int a = 1; a <= 3; ++a) {
    omega[0][a] = bst(a - 1);
    omega[a][0] = bst(a - 1);
  }
  Connection out = Gp;
  for (int al = 0; al < 4; ++al)
    for (int ga = 0; ga < 4; ++ga)
      for (int be = 0; be < 4; ++be) out.g[al][ga][be] += L(0, al) * omega[ga][be];
  return out;
}

void weyl_from_constraints(const FrameTensor<4>& Rt, const Mat4& St, const Eigen::Matrix4d& L,
                           Mat4& E, Mat4& B) {
  // Adapted-frame Weyl components with a spatial last pair.
  FrameTensor<4> Wt{};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 1; c <= 3; ++c)
        for (int d = 1; d <= 3; ++d) {
          double v = Rt[idx4(a, b, c, d)];
          if (a == c) v -= 0.5 * St[d][b];
          if (a == d) v += 0.5 * St[c][b];
          v += 0.5 * (metric(b, c) * eta(a) * St[d][a] - metric(b, d) * eta(a) * St[c][a]);
          Wt[idx4(a, b, c, d)] = eta(a) * v;
        }
  // W_0b0d from tracelessness, remaining components by the pair symmetries.
  double W0[4][4] = {};
  for (int b = 1; b <= 3; ++b)
    for (int d = 1; d <= 3; ++d) {
      double s = 0.0;
      for (int a = 1; a <= 3; ++a) s += Wt[idx4(a, b, a, d)];
      W0[b][d] = s;
    }
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          if (a == b || c == d) {
            Wt[idx4(a, b, c, d)] = 0.0;
            continue;
          }
          if (c != 0 && d != 0) continue;
          if (a != 0 && b != 0) {
            Wt[idx4(a, b, c, d)] = Wt[idx4(c, d, a, b)];
            continue;
          }
          const double s1 = a == 0 ? 1.0 : -1.0, s2 = c == 0 ? 1.0 : -1.0;
          const int bb = a == 0 ? b : a, dd = c == 0 ? d : c;
          Wt[idx4(a, b, c, d)] = s1 * s2 * W0[bb][dd];
        }
  // Boost each index: W_abcd = L^m_a L^n_b L^r_c L^s_d W~_mnrs.
  FrameTensor<4> cur = Wt, next{};
  for (int slot = 0; slot < 4; ++slot) {
    next.fill(0.0);
    for (int i0 = 0; i0 < 4; ++i0)
      for (int i1 = 0; i1 < 4; ++i1)
        for (int i2 = 0; i2 < 4; ++i2)
          for (int i3 = 0; i3 < 4; ++i3) {
            int idx[4] = {i0, i1, i2, i3};
            double v = 0.0;
            const int keep = idx[slot];
            for (int m = 0; m < 4; ++m) {
              idx[slot] = m;
              v += L(m, keep) * cur[idx4(idx[0], idx[1], idx[2], idx[3])];
            }
            next[idx4(i0, i1, i2, i3)] = v;
          }
    cur = next;
  }
  eb_from_weyl(cur, E, B);
}

ConstraintResidualFields constraint_residuals(const CauchyData& cd) {
  const Grid& g = cd.grid;
  const std::size_t N = g.size();
  const Fields chr = christoffels(cd);
  Fields T(N, 9);
  for (std::size_t p = 0; p < N; ++p) {
    const Eigen::Matrix3d gi = cd.g0[p].inverse();
    const double trk = (gi * cd.kappa[p]).trace();
    for (int A = 0; A < 3; ++A)
      for (int B = 0; B < 3; ++B) T.at(3 * A + B, p) = cd.kappa[p](A, B) - trk * cd.g0[p](A, B);
  }
  ConstraintResidualFields out;
  out.hamiltonian.resize(N);
  out.momentum.resize(N);
  for (std::size_t p = 0; p < N; ++p) {
    const Eigen::Matrix3d& g0 = cd.g0[p];
    const Eigen::Matrix3d gi = g0.inverse();
    auto G = [&](int A, int B, int C) { return chr.at(9 * A + 3 * B + C, p); };
    // Ricci scalar.
    double R = 0.0;
    for (int B = 0; B < 3; ++B)
      for (int D = 0; D < 3; ++D) {
        double ric = 0.0;
        for (int A = 0; A < 3; ++A) {
          ric += deriv(g, chr, 9 * A + 3 * B + D, A, p) - deriv(g, chr, 9 * A + 3 * A + B, D, p);
          for (int E = 0; E < 3; ++E) ric += G(A, A, E) * G(E, B, D) - G(A, D, E) * G(E, A, B);
        }
        R += gi(B, D) * ric;
      }
    const Eigen::Matrix3d K = cd.kappa[p];
    const double kk = (gi * K * gi * K).trace();
    const double trk = (gi * K).trace();
    const ThermoPoint th = thermo(*cd.eos, cd.r0[p], cd.s0[p]);
    const double hpr = th.p + th.rho;
    const Eigen::Vector3d& v = cd.v[p];
    const double vv = -v.dot(g0 * v);
    const double gam2 = 1.0 + vv;
    const double mu = cd.kappa_const * (hpr * gam2 - th.p);
    out.hamiltonian[p] = R + kk - trk * trk + 2.0 * mu;
    const Eigen::Vector3d J = cd.kappa_const * hpr * std::sqrt(gam2) * (g0 * v);
    Eigen::Vector3d div;
    for (int B = 0; B < 3; ++B) {
      double s = 0.0;
      for (int A = 0; A < 3; ++A)
        for (int C = 0; C < 3; ++C) {
          double nab = deriv(g, T, 3 * C + B, A, p);
          for (int E = 0; E < 3; ++E)
            nab -= G(E, A, C) * T.at(3 * E + B, p) + G(E, A, B) * T.at(3 * C + E, p);
          s += gi(A, C) * nab;
        }
      div(B) = s;
    }
    out.momentum[p] = div - J;
    out.hamiltonian_max = std::max(out.hamiltonian_max, std::abs(out.hamiltonian[p]));
    out.momentum_max = std::max(out.momentum_max, out.momentum[p].cwiseAbs().maxCoeff());
  }
  return out;
}

FieldSet build_reduced_initial_data(const CauchyData& cd, InitialDataReport* report) {
  const Grid& g = cd.grid;
  g.validate();
  const std::size_t N = g.size();
  if (cd.g0.size() != N || cd.kappa.size() != N || cd.v.size() != N || cd.r0.size() != N ||
      cd.s0.size() != N || !cd.eos)
    throw std::invalid_argument("build_reduced_initial_data: Cauchy data do not match the grid");

  // Pointwise: thermodynamics, triad, boost.
  std::vector<ThermoPoint> th(N);
  std::vector<Eigen::Matrix3d> triad(N);
  std::vector<Eigen::Matrix4d> boost(N);
  Fields lam(N, 16), tri(N, 9), scal(N, 2);  // scal: p, s
  for (std::size_t p = 0; p < N; ++p) {
    th[p] = thermo(*cd.eos, cd.r0[p], cd.s0[p]);
    if (!th[p].admissible) {
      std::ostringstream os;
      os << "inadmissible thermodynamic data at point " << p << " (r=" << cd.r0[p] << ", s=" << cd.s0[p]
         << ", nu2=" << th[p].nu2 << ")";
      throw std::domain_error(os.str());
    }
    triad[p] = orthonormal_triad(cd.g0[p]);
    const Eigen::Vector3d vt = triad[p].inverse() * cd.v[p];
    boost[p] = boost_from_velocity(vt);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) lam.at(c16(i, j), p) = boost[p](i, j);
    for (int A = 0; A < 3; ++A)
      for (int a = 0; a < 3; ++a) tri.at(3 * A + a, p) = triad[p](A, a);
    scal.at(0, p) = th[p].p;
    scal.at(1, p) = cd.s0[p];
  }

  // Adapted-frame connection.
  const Fields chr = christoffels(cd);
  Fields gt(N, 64);
  for (std::size_t p = 0; p < N; ++p) {
    const Eigen::Matrix3d& T = triad[p];
    const Eigen::Matrix3d Ti = T.inverse();
    const Eigen::Matrix3d kt = T.transpose() * cd.kappa[p] * T;
    for (int a = 1; a <= 3; ++a)
      for (int b = 1; b <= 3; ++b) {
        // Coordinate components of nabla_{e~_a} e~_b.
        Eigen::Vector3d w = Eigen::Vector3d::Zero();
        for (int C = 0; C < 3; ++C) {
          double v = 0.0;
          for (int B = 0; B < 3; ++B) {
            double inner = deriv(g, tri, 3 * C + (b - 1), B, p);
            for (int D = 0; D < 3; ++D) inner += chr.at(9 * C + 3 * B + D, p) * T(D, b - 1);
            v += T(B, a - 1) * inner;
          }
          w(C) = v;
        }
        const Eigen::Vector3d comp = Ti * w;
        for (int c = 1; c <= 3; ++c) gt.at(c64(a, c, b), p) = comp(c - 1);
        gt.at(c64(a, 0, b), p) = -kt(a - 1, b - 1);
        gt.at(c64(a, b, 0), p) = -kt(a - 1, b - 1);
      }
  }

  FieldSet fs(g);
  fs.t = 0.0;
  InitialDataReport rep;
  const Eigen::Matrix4d eta4 = minkowski();
  for (std::size_t p = 0; p < N; ++p) {
    const Eigen::Matrix4d& L = boost[p];
    const Eigen::Matrix3d& T = triad[p];
    const double L00 = L(0, 0);
    StateVec z{};
    // Frame.
    double e0[4] = {0.0, 0.0, 0.0, 0.0};
    Eigen::Matrix3d es;  // es(A, a) = e^A_a, spatial A
    for (int a = 1; a <= 3; ++a) {
      e0[a] = L(0, a) / L00;
      z[frame(0, a)] = e0[a];
      for (int A = 0; A < 3; ++A) {
        double v = 0.0;
        for (int m = 1; m <= 3; ++m) v += (L(m, a) - L(0, a) * L(m, 0) / L00) * T(A, m - 1);
        es(A, a - 1) = v;
        z[frame(A + 1, a)] = v;
      }
    }
    // Connection.
    Connection Gt;
    for (int a = 0; a < 4; ++a)
      for (int c = 0; c < 4; ++c)
        for (int b = 0; b < 4; ++b) Gt.g[a][c][b] = gt.at(c64(a, c, b), p);
    std::array<Eigen::Matrix4d, 3> dL;
    for (int m = 1; m <= 3; ++m) {
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
          double v = 0.0;
          for (int M = 0; M < 3; ++M) v += T(M, m - 1) * deriv(g, lam, c16(i, j), M, p);
          dL[m - 1](i, j) = v;
        }
    }
    const Connection Gp = transform_connection(L, dL, Gt);
    Eigen::Vector3d dp, ds;
    for (int M = 0; M < 3; ++M) {
      dp(M) = deriv(g, scal, 0, M, p);
      ds(M) = deriv(g, scal, 1, M, p);
    }
    const Eigen::Vector3d grad_p = es.transpose() * dp;
    const double hpr = th[p].p + th[p].rho;
    const Connection G = apply_fluid_gauge(Gp, L, e0, grad_p, th[p].nu2, hpr);
    store_connection(G, z);

    // Weyl parts from the adapted-frame curvature.
    std::array<Connection, 4> dGt;
    for (int c = 1; c <= 3; ++c)
      for (int a = 0; a < 4; ++a)
        for (int e = 0; e < 4; ++e)
          for (int b = 0; b < 4; ++b) {
            double v = 0.0;
            for (int M = 0; M < 3; ++M) v += T(M, c - 1) * deriv(g, gt, c64(a, e, b), M, p);
            dGt[c].g[a][e][b] = v;
          }
    const FrameTensor<4> Rt = riemann(Gt, dGt);
    Mat4 St{};
    {
      double ut[4];
      for (int m = 0; m < 4; ++m) ut[m] = eta(m) * L(m, 0);
      for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n)
          St[m][n] = cd.kappa_const * (hpr * ut[m] * ut[n] - metric(m, n) * th[p].rho / 3.0);
    }
    Mat4 E, B;
    weyl_from_constraints(Rt, St, L, E, B);
    for (const auto& pr : kSymPairs) {
      z[weyl_e(pr[0], pr[1])] = 0.5 * (E[pr[0]][pr[1]] + E[pr[1]][pr[0]]);
      z[weyl_b(pr[0], pr[1])] = 0.5 * (B[pr[0]][pr[1]] + B[pr[1]][pr[0]]);
    }

    // Matter.
    z[kRho] = th[p].rho;
    z[kRestMass] = cd.r0[p];
    z[kEntropy] = cd.s0[p];
    const Eigen::Vector3d sgrad = es.transpose() * ds;
    for (int a = 1; a <= 3; ++a) z[entropy_grad(a)] = sgrad(a - 1);
    fs.set_point(p, z);

    // Report.
    const Eigen::Vector4d u = L.col(0);
    rep.u_norm_max = std::max(rep.u_norm_max, std::abs(u.dot(eta4 * u) - 1.0));
    rep.lorentz_max = std::max(rep.lorentz_max, lorentz_orthogonality_residual(L));
    const Eigen::Vector3d proj = T * u.tail<3>();
    rep.projection_max = std::max(rep.projection_max, (proj - cd.v[p]).cwiseAbs().maxCoeff());
    rep.boost_gamma_max = std::max(rep.boost_gamma_max, L00);
    for (int a = 1; a <= 3; ++a)
      for (int b = 1; b <= 3; ++b) {
        rep.gauge_max = std::max(rep.gauge_max, std::abs(G(0, a, b)));
        rep.eb_symmetry_max = std::max({rep.eb_symmetry_max, std::abs(E[a][b] - E[b][a]),
                                        std::abs(B[a][b] - B[b][a])});
      }
    rep.eb_trace_max = std::max({rep.eb_trace_max, std::abs(E[1][1] + E[2][2] + E[3][3]),
                                 std::abs(B[1][1] + B[2][2] + B[3][3])});
  }
  if (report) {
    const ConstraintResidualFields cr = constraint_residuals(cd);
    rep.hamiltonian_max = cr.hamiltonian_max;
    rep.momentum_max = cr.momentum_max;
    rep.boosts = std::move(boost);
    *report = std::move(rep);
  }
  return fs;
}

}  // namespace eee
