#include "eee/state.hpp"

#include <Eigen/Dense>
#include <stdexcept>

namespace eee {

namespace layout {

std::string component_name(int i) {
  const std::string digits = "0123";
  if (i < kConnSpatial) {
    const int a = (i - kFrame) / 4 + 1, A = (i - kFrame) % 4;
    return std::string("e") + digits[A] + "_" + digits[a];
  }
  if (i < kLapse) {
    const int d = (i - kConnSpatial) / 3 + 1, k = (i - kConnSpatial) % 3;
    return std::string("G") + digits[d] + "_" + digits[kAntiPairs[k][0]] + digits[kAntiPairs[k][1]];
  }
  if (i < kExtr) return std::string("G0_0") + digits[i - kLapse + 1];
  if (i < kWeylE) {
    const int a = (i - kExtr) / 3 + 1, b = (i - kExtr) % 3 + 1;
    return std::string("G") + digits[a] + "_0" + digits[b];
  }
  if (i < kWeylB) {
    const int k = i - kWeylE;
    return std::string("E") + digits[kSymPairs[k][0]] + digits[kSymPairs[k][1]];
  }
  if (i < kRho) {
    const int k = i - kWeylB;
    return std::string("B") + digits[kSymPairs[k][0]] + digits[kSymPairs[k][1]];
  }
  if (i == kRho) return "rho";
  if (i == kRestMass) return "r";
  if (i == kEntropy) return "s";
  if (i < kStateSize) return std::string("s_") + digits[i - kEntropyGrad];
  throw std::out_of_range("component index out of range");
}

int component_index(const std::string& name) {
  for (int i = 0; i < kStateSize; ++i)
    if (component_name(i) == name) return i;
  return -1;
}

}  // namespace layout

using namespace layout;

Connection expand_connection(const StateVec& z) {
  Connection G;
  for (int d = 1; d <= 3; ++d)
    for (const auto& pr : kAntiPairs) {
      const double v = z[conn_spatial(d, pr[0], pr[1])];
      G.g[d][pr[0]][pr[1]] = v;
      G.g[d][pr[1]][pr[0]] = -v;
    }
  for (int a = 1; a <= 3; ++a) {
    G.g[0][0][a] = z[lapse(a)];
    G.g[0][a][0] = z[lapse(a)];
    for (int b = 1; b <= 3; ++b) {
      G.g[a][0][b] = z[extr(a, b)];
      G.g[a][b][0] = z[extr(a, b)];
    }
  }
  return G;
}

void store_connection(const Connection& G, StateVec& z) {
  for (int d = 1; d <= 3; ++d)
    for (const auto& pr : kAntiPairs) z[conn_spatial(d, pr[0], pr[1])] = G.g[d][pr[0]][pr[1]];
  for (int a = 1; a <= 3; ++a) {
    z[lapse(a)] = G.g[0][0][a];
    for (int b = 1; b <= 3; ++b) z[extr(a, b)] = G.g[a][0][b];
  }
}

std::array<std::array<double, 4>, 4> frame_matrix(const StateVec& z) {
  std::array<std::array<double, 4>, 4> fr{};
  fr[0][0] = 1.0;
  for (int a = 1; a <= 3; ++a)
    for (int A = 0; A < 4; ++A) fr[A][a] = z[frame(A, a)];
  return fr;
}

std::array<std::array<double, 4>, 4> weyl_matrix(const StateVec& z, int offset) {
  std::array<std::array<double, 4>, 4> m{};
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) m[a][b] = z[offset + sym_index(a, b)];
  return m;
}

InducedMetric induced_metric(const StateVec& z) {
  const auto fr = frame_matrix(z);
  InducedMetric out;
  for (int A = 0; A < 4; ++A)
    for (int B = 0; B < 4; ++B) {
      double v = 0.0;
      for (int m = 0; m < 4; ++m) v += fr[A][m] * fr[B][m] * (m == 0 ? 1.0 : -1.0);
      out.g_upper[A][B] = v;
    }
  Eigen::Matrix3d S;
  for (int B = 1; B <= 3; ++B)
    for (int a = 1; a <= 3; ++a) S(B - 1, a - 1) = fr[B][a];
  Eigen::FullPivLU<Eigen::Matrix3d> lu(S);
  if (!lu.isInvertible()) throw std::domain_error("induced_metric: singular spatial frame block");
  const Eigen::Matrix3d f = lu.inverse();  // f(a, B) = f^a_B
  Eigen::Vector3d f0;
  for (int B = 0; B < 3; ++B) {
    double v = 0.0;
    for (int a = 0; a < 3; ++a) v -= f(a, B) * fr[0][a + 1];
    f0(B) = v;
  }
  Eigen::Matrix3d gt = f0 * f0.transpose() - f.transpose() * f;
  for (int A = 0; A < 3; ++A)
    for (int B = 0; B < 3; ++B) out.g_t[A][B] = gt(A, B);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(gt, Eigen::EigenvaluesOnly);
  out.g_t_min_eig = es.eigenvalues()(0);
  out.g_t_max_eig = es.eigenvalues()(2);
  return out;
}

}  // namespace eee
