#pragma once

#include <array>

#include "eee/eos.hpp"
#include "eee/frame_algebra.hpp"
#include "eee/state.hpp"

// Curvature, Weyl decomposition and the gauge-propagation residuals of a
// reduced state evaluated from a full first-order jet.
namespace eee {

using Mat4 = std::array<std::array<double, 4>, 4>;

constexpr std::size_t idx4(int a, int b, int c, int d) {
  return static_cast<std::size_t>(((a * 4 + b) * 4 + c) * 4 + d);
}
constexpr std::size_t idx3(int a, int b, int c) { return static_cast<std::size_t>((a * 4 + b) * 4 + c); }

// W_{abcd} (all indices down) from the electric and magnetic parts relative
// to u = e_0.
FrameTensor<4> weyl_from_eb(const Mat4& E, const Mat4& B);

// E_ab = W_0a0b and B_ab = 1/2 W_0amn eps_0b^mn.
void eb_from_weyl(const FrameTensor<4>& W, Mat4& E, Mat4& B);

// W*_{abcd} = 1/2 eps_cd^mn W_abmn.
FrameTensor<4> weyl_dual(const FrameTensor<4>& W);

// R^a_bcd from the connection and its frame derivatives dG[c] = e_c(Gamma).
FrameTensor<4> riemann(const Connection& G, const std::array<Connection, 4>& dG);

// Schouten tensor S_ab = kappa (T_ab - T g_ab / 3) of a perfect fluid at rest
// in the frame: kappa ((p + rho) u_a u_b - rho g_ab / 3).
Mat4 schouten(double rho, double p, double kappa);

// e_mu(z) for all mu from the coordinate jet.
std::array<StateVec, 4> frame_derivatives(const StateVec& z, const StateJet& jet);

struct PointResiduals {
  FrameTensor<3> torsion{};  // T_a^m_b at idx3(a, m, b)
  FrameTensor<4> d{};        // d^a_bcd
  FrameTensor<3> friedrich{};  // F_bcd
  std::array<double, 4> q{};
  std::array<double, 4> entropy_grad{};  // s_a - e_a(s)
  double trace_e = 0, trace_b = 0;
  double rho_eos = 0;  // rho - P(r, s)

  double torsion_max() const;
  double d_max() const;
  double friedrich_max() const;
  double q_max() const;
  double entropy_grad_max() const;
};

// All residuals at a point. The jet must contain the time derivative too
// (normally taken from the reduced system).
PointResiduals point_residuals(const StateVec& z, const StateJet& jet, const ThermoPoint& th,
                               double kappa);

}  // namespace eee
