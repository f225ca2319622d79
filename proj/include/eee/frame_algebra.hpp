#pragma once

#include <array>
#include <cstddef>

// Constant-metric tensor algebra in an orthonormal frame with
// g = diag(1,-1,-1,-1). Index 0 is the time direction; 1..3 are spatial.
namespace eee {

constexpr std::size_t ipow4(std::size_t rank) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < rank; ++i) n *= 4;
  return n;
}

// Dense frame tensor of a given rank, components stored row-major in 0..3.
template <std::size_t Rank>
using FrameTensor = std::array<double, ipow4(Rank)>;

// Diagonal metric entry g_aa = g^aa.
constexpr double eta(int a) { return a == 0 ? 1.0 : -1.0; }
constexpr double metric(int a, int b) { return a == b ? eta(a) : 0.0; }

// Totally antisymmetric symbol with all indices down, eps_{0123} = +1.
double levi_civita(int a, int b, int c, int d);

// eps_{abcd} with the slots flagged in `raised_mask` (bit i = slot i) raised
// by explicit contraction with the metric.
double levi_civita_mixed(int a, int b, int c, int d, unsigned raised_mask);

// Spatial volume form eps_{abc} = eps_{mabc} u^m in fluid source gauge
// (u^m = delta^m_0), all indices down.
inline double eps3(int a, int b, int c) { return levi_civita(0, a, b, c); }

// eps3 with raised slots (bit i = slot i).
double eps3_mixed(int a, int b, int c, unsigned raised_mask);

// Spatial projector pi_ab = g_ab - u_a u_b in fluid source gauge.
constexpr double projector_lower(int a, int b) {
  return (a == b && a != 0) ? -1.0 : 0.0;
}
// pi_a^b = delta_a^b - delta_a0 delta^b0.
constexpr double projector_mixed(int a, int b) {
  return (a == b && a != 0) ? 1.0 : 0.0;
}

// Raise or lower index `slot` of a rank-R tensor. With a diagonal metric
// whose inverse equals itself, both operations flip the sign of spatial
// values in that slot. Throws std::out_of_range for an invalid slot.
template <std::size_t Rank>
FrameTensor<Rank> raise_lower(const FrameTensor<Rank>& t, std::size_t slot);

// Brute-force contractions of the spatial epsilon identities on a spatial
// rank-2 tensor A (only the 1..3 block is read).
//   lhs1_{ab} = eps^{m a c} eps_{m b d} A_c^d  (identity with pi pi)
//   rhs1_{ab} = -2 pi^a_[b pi^c_d] A_c^d
struct EpsContraction {
  std::array<std::array<double, 4>, 4> lhs{};
  std::array<std::array<double, 4>, 4> rhs{};
};
EpsContraction eps3_contract(const std::array<std::array<double, 4>, 4>& a);

// eps^{m n a} eps_{m n b} as a 4x4 array (equals -2 pi^a_b).
std::array<std::array<double, 4>, 4> eps3_double_trace();

// Symmetric and antisymmetric parts of a rank-2 tensor.
std::array<std::array<double, 4>, 4> sym(const std::array<std::array<double, 4>, 4>& t);
std::array<std::array<double, 4>, 4> antisym(const std::array<std::array<double, 4>, 4>& t);

}  // namespace eee
