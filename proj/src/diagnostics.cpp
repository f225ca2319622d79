#include "eee/diagnostics.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "eee/reduced_rhs.hpp"

namespace eee {

using namespace layout;

namespace {

constexpr const char* kNames[ResidualFields::kCount] = {
    "torsion", "d", "friedrich", "q", "q0", "entropy_grad", "trace_e", "trace_b", "rho_eos"};

// Multi-indices with |alpha| <= order.
std::vector<std::array<int, 3>> multi_indices(int order) {
  std::vector<std::array<int, 3>> out;
  for (int total = 0; total <= order; ++total)
    for (int a = total; a >= 0; --a)
      for (int b = total - a; b >= 0; --b) out.push_back({a, b, total - a - b});
  return out;
}

// |D^alpha f|^2 summed over multi-indices, per point.
std::vector<double> derivative_energy(const Grid& g, const std::vector<double>& f, int order) {
  const std::size_t N = g.size();
  std::vector<double> energy(N, 0.0), work(N), tmp(N);
  for (const auto& alpha : multi_indices(order)) {
    work = f;
    for (int axis = 0; axis < 3; ++axis)
      for (int r = 0; r < alpha[axis]; ++r) {
        fd_derivative(g, work.data(), axis, tmp.data());
        work.swap(tmp);
      }
    for (std::size_t p = 0; p < N; ++p) energy[p] += work[p] * work[p];
  }
  return energy;
}

}  // namespace

const char* residual_name(int quantity) {
  if (quantity < 0 || quantity >= ResidualFields::kCount) throw std::out_of_range("residual quantity");
  return kNames[quantity];
}

PointResiduals residuals_at(const FieldSet& fs, const FieldSet& dzdt, std::size_t p,
                            const EquationOfState& eos, double kappa) {
  const StateVec z = fs.point(p);
  StateJet jet;
  spatial_jet(fs, p, jet);
  jet[0] = dzdt.point(p);
  return point_residuals(z, jet, state_thermo(z, eos), kappa);
}

ResidualFields residual_fields(const FieldSet& fs, const EquationOfState& eos, double kappa) {
  const std::size_t N = fs.points();
  FieldSet dz(fs.grid());
  time_derivative(fs, eos, kappa, dz);
  ResidualFields out;
  for (auto& f : out.field) f.assign(N, 0.0);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t ip = 0; ip < static_cast<std::ptrdiff_t>(N); ++ip) {
    const std::size_t p = static_cast<std::size_t>(ip);
    const PointResiduals r = residuals_at(fs, dz, p, eos, kappa);
    out.field[ResidualFields::kTorsion][p] = r.torsion_max();
    out.field[ResidualFields::kD][p] = r.d_max();
    out.field[ResidualFields::kFriedrich][p] = r.friedrich_max();
    out.field[ResidualFields::kQ][p] = r.q_max();
    out.field[ResidualFields::kQ0][p] = std::abs(r.q[0]);
    out.field[ResidualFields::kEntropyGrad][p] = r.entropy_grad_max();
    out.field[ResidualFields::kTraceE][p] = std::abs(r.trace_e);
    out.field[ResidualFields::kTraceB][p] = std::abs(r.trace_b);
    out.field[ResidualFields::kRhoEos][p] = std::abs(r.rho_eos);
  }
  return out;
}

double linf_norm(const std::vector<double>& f) {
  double m = 0.0;
  for (double x : f) {
    if (std::isnan(x)) return x;
    m = std::max(m, std::abs(x));
  }
  return m;
}

std::vector<double> characteristic_speeds(const StateVec& z, const EquationOfState& eos, double kappa,
                                          const std::array<double, 3>& xi) {
  const double norm = std::sqrt(xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2]);
  if (std::abs(norm - 1.0) > 1e-12) throw std::invalid_argument("characteristic_speeds: xi must be a unit covector");
  const PrincipalMatrices pm = assemble_principal(z, eos, kappa);
  const Matrix52 sym = xi[0] * pm.M[1] + xi[1] * pm.M[2] + xi[2] * pm.M[3];
  Eigen::LLT<Matrix52> llt(pm.M[0]);
  if (llt.info() != Eigen::Success) {
    Eigen::SelfAdjointEigenSolver<Matrix52> es(pm.M[0], Eigen::EigenvaluesOnly);
    throw PositivityError("characteristic_speeds: M0 not positive definite", es.eigenvalues()(0));
  }
  Eigen::GeneralizedSelfAdjointEigenSolver<Matrix52> ges(sym, pm.M[0], Eigen::EigenvaluesOnly);
  std::vector<double> out(ges.eigenvalues().data(), ges.eigenvalues().data() + kStateSize);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> ul_sobolev_patch_values(const Grid& g, const std::vector<double>& f, int order,
                                            int patch) {
  if (order < 0) throw std::invalid_argument("ul_sobolev_norm: order must be non-negative");
  if (patch < g.fd_order + 1)
    throw std::invalid_argument("ul_sobolev_norm: patch smaller than the stencil width");
  if (f.size() != g.size()) throw std::invalid_argument("ul_sobolev_norm: field does not match grid");
  const std::vector<double> energy = derivative_energy(g, f, order);
  const double vol = g.h() * g.h() * g.h();
  const int n = g.n;
  std::vector<double> out;
  if (patch >= n) {
    double s = 0.0;
    for (double e : energy) s += e;
    out.push_back(std::sqrt(vol * s));
    return out;
  }
  const int stride = std::max(1, patch / 2);
  for (int k0 = 0; k0 < n; k0 += stride)
    for (int j0 = 0; j0 < n; j0 += stride)
      for (int i0 = 0; i0 < n; i0 += stride) {
        double s = 0.0;
        for (int k = 0; k < patch; ++k)
          for (int j = 0; j < patch; ++j)
            for (int i = 0; i < patch; ++i) s += energy[g.index(i0 + i, j0 + j, k0 + k)];
        out.push_back(std::sqrt(vol * s));
      }
  return out;
}

double ul_sobolev_norm(const Grid& g, const std::vector<double>& f, int order, int patch) {
  const std::vector<double> v = ul_sobolev_patch_values(g, f, order, patch);
  return *std::max_element(v.begin(), v.end());
}

DiagnosticRow compute_diagnostics(const FieldSet& fs, const EquationOfState& eos, double kappa,
                                  const DiagnosticOptions& opt) {
  const Grid& g = fs.grid();
  const std::size_t N = fs.points();
  DiagnosticRow row;
  row.t = fs.t;
  double rho = 0.0, hub = 0.0;
  for (std::size_t p = 0; p < N; ++p) {
    rho += fs.at(kRho, p);
    hub += (fs.at(extr(1, 1), p) + fs.at(extr(2, 2), p) + fs.at(extr(3, 3), p)) / 3.0;
  }
  row.rho = rho / static_cast<double>(N);
  row.hubble_trace = hub / static_cast<double>(N);

  const ResidualFields rf = residual_fields(fs, eos, kappa);
  const int patch = opt.hs_patch > 0 ? opt.hs_patch : std::max(g.n / 2, g.fd_order + 1);
  for (int q = 0; q < ResidualFields::kCount; ++q) {
    row.linf[q] = linf_norm(rf.field[q]);
    row.hs[q] = ul_sobolev_norm(g, rf.field[q], opt.hs_order, patch);
  }

  const int stride = opt.sample_stride > 0 ? opt.sample_stride : std::max(1, g.n / 4);
  row.speed_min = 0.0;
  row.speed_max = 0.0;
  row.m0_min_eig = INFINITY;
  row.gt_min_eig = INFINITY;
  row.gt_max_eig = -INFINITY;
  for (std::size_t p = 0; p < N; ++p) {
    const StateVec z = fs.point(p);
    const InducedMetric im = induced_metric(z);
    row.gt_min_eig = std::min(row.gt_min_eig, im.g_t_min_eig);
    row.gt_max_eig = std::max(row.gt_max_eig, im.g_t_max_eig);
    int i, j, k;
    g.coords(p, i, j, k);
    if (i % stride || j % stride || k % stride) continue;
    row.m0_min_eig = std::min(row.m0_min_eig, m0_min_eigenvalue(z, eos, kappa));
    for (int axis = 0; axis < 3; ++axis) {
      std::array<double, 3> xi{0.0, 0.0, 0.0};
      xi[axis] = 1.0;
      const std::vector<double> sp = characteristic_speeds(z, eos, kappa, xi);
      row.speed_min = std::min(row.speed_min, sp.front());
      row.speed_max = std::max(row.speed_max, sp.back());
    }
  }
  return row;
}

std::string csv_header() {
  std::string h = "t,rho,hubble_trace";
  for (int q = 0; q < ResidualFields::kCount; ++q) h += std::string(",linf_") + kNames[q];
  for (int q = 0; q < ResidualFields::kCount; ++q) h += std::string(",hs_") + kNames[q];
  h += ",speed_min,speed_max,m0_min_eig,gt_min_eig,gt_max_eig";
  return h;
}

std::string csv_row(const DiagnosticRow& r) {
  std::string out;
  char buf[32];
  auto put = [&](double x) {
    std::snprintf(buf, sizeof buf, "%.17g", x);
    if (!out.empty()) out += ',';
    out += buf;
  };
  put(r.t);
  put(r.rho);
  put(r.hubble_trace);
  for (double x : r.linf) put(x);
  for (double x : r.hs) put(x);
  put(r.speed_min);
  put(r.speed_max);
  put(r.m0_min_eig);
  put(r.gt_min_eig);
  put(r.gt_max_eig);
  return out;
}

}  // namespace eee
