#pragma once

#include <Eigen/Dense>
#include <array>
#include <memory>
#include <vector>

#include "eee/eos.hpp"
#include "eee/geometry.hpp"
#include "eee/grid.hpp"

// Reduced initial data on t = 0 from an initial data set (g0, kappa, r0, s0, v).
// g0 is negative definite; kappa is its second fundamental form with the sign
// for which kappa = H g0 (H > 0) is an expanding slice; v is the tangential
// projection of the fluid velocity, given by coordinate components.
namespace eee {

struct CauchyData {
  Grid grid;
  std::vector<Eigen::Matrix3d> g0, kappa;
  std::vector<Eigen::Vector3d> v;
  std::vector<double> r0, s0;
  std::shared_ptr<const EquationOfState> eos;
  double kappa_const = 1.0;

  CauchyData() = default;
  CauchyData(const Grid& g, std::shared_ptr<const EquationOfState> e, double k);
};

// Triad e~^A_a (column a) orthonormal for -g0, by Gram-Schmidt on the
// coordinate basis in axis order 1, 2, 3. Throws std::domain_error if g0 is
// not negative definite.
Eigen::Matrix3d orthonormal_triad(const Eigen::Matrix3d& g0);

// Tangential velocity v = gamma beta for a measured three-velocity beta
// (orthonormal components). Throws std::domain_error for |beta| >= 1.
Eigen::Vector3d three_velocity_to_projection(const Eigen::Vector3d& beta);

// Lambda^mu_nu taking the slice-adapted frame (normal, triad) to the fluid
// frame whose time leg is u, for v with triad components vt.
Eigen::Matrix4d boost_from_velocity(const Eigen::Vector3d& vt);

// max |Lambda^T g Lambda - g|.
double lorentz_orthogonality_residual(const Eigen::Matrix4d& L);

// Connection of the boosted frame from the adapted-frame connection Gt and the
// triad derivatives dL[m-1] = e~_m(Lambda), before the gauge rotation.
Connection transform_connection(const Eigen::Matrix4d& L, const std::array<Eigen::Matrix4d, 3>& dL,
                                const Connection& Gt);

// Adds Lambda^0_a omega with omega in the Lorentz algebra chosen so that
// Gamma_0^a_b = 0 and the Euler equation holds:
// hpr Gamma_0^0_a + e_a(p) = 0 with d_t p = -hpr nu2 theta.
// e0 = e^0_a (index 1..3), grad_p = e^A_a d_A p for a = 1..3.
Connection apply_fluid_gauge(const Connection& Gp, const Eigen::Matrix4d& L, const double e0[4],
                             const Eigen::Vector3d& grad_p, double nu2, double hpr);

// E and B of the boosted frame from the adapted-frame Riemann components with
// a spatial last pair (R~^a_bcd, c, d = 1..3) and the adapted-frame Schouten tensor.
void weyl_from_constraints(const FrameTensor<4>& Rt, const Mat4& St, const Eigen::Matrix4d& L,
                           Mat4& E, Mat4& B);

struct ConstraintResidualFields {
  std::vector<double> hamiltonian;          // R + |kappa|^2 - (tr kappa)^2 + 2 mu
  std::vector<Eigen::Vector3d> momentum;    // div(kappa - tr kappa g0) - J
  double hamiltonian_max = 0, momentum_max = 0;
};

ConstraintResidualFields constraint_residuals(const CauchyData& cd);

struct InitialDataReport {
  double u_norm_max = 0;         // max |u.u - 1|
  double lorentz_max = 0;        // max Lambda orthogonality residual
  double projection_max = 0;     // max |pi_g(u) - v|
  double boost_gamma_max = 0;    // max Lambda^0_0
  double gauge_max = 0;          // max |Gamma_0^a_b|
  double eb_symmetry_max = 0;    // max |E_ab - E_ba|, |B_ab - B_ba|
  double eb_trace_max = 0;
  double hamiltonian_max = 0, momentum_max = 0;
  std::vector<Eigen::Matrix4d> boosts;  // per point
};

// Complete reduced state at t = 0. Throws std::domain_error for inadmissible
// thermodynamics or a non-negative-definite g0.
FieldSet build_reduced_initial_data(const CauchyData& cd, InitialDataReport* report = nullptr);

}  // namespace eee
