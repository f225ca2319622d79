#pragma once

#include <array>
#include <string>

// Pointwise unknowns of the reduced system in fluid source gauge and the
// full connection they determine.
namespace eee {

constexpr int kStateSize = 52;
using StateVec = std::array<double, kStateSize>;

// Jet of a state at a point: derivative[0] = d/dt, derivative[1..3] = d/dx^A.
using StateJet = std::array<StateVec, 4>;

namespace layout {
constexpr int kFrame = 0;         // e^A_a, A = 0..3, a = 1..3
constexpr int kConnSpatial = 12;  // Gamma_d^a_b, a < b
constexpr int kLapse = 21;        // Gamma_0^0_a
constexpr int kExtr = 24;         // Gamma_a^0_b
constexpr int kWeylE = 33;        // E_ab, a <= b
constexpr int kWeylB = 39;        // B_ab, a <= b
constexpr int kRho = 45;
constexpr int kRestMass = 46;
constexpr int kEntropy = 47;
constexpr int kEntropyGrad = 48;  // s_alpha, alpha = 0..3

constexpr int frame(int A, int a) { return kFrame + 4 * (a - 1) + A; }
// Antisymmetric pair index for 1 <= a < b <= 3: (1,2) -> 0, (1,3) -> 1, (2,3) -> 2.
constexpr int pair_index(int a, int b) { return a + b - 3; }
constexpr int conn_spatial(int d, int a, int b) { return kConnSpatial + 3 * (d - 1) + pair_index(a, b); }
constexpr int lapse(int a) { return kLapse + a - 1; }
constexpr int extr(int a, int b) { return kExtr + 3 * (a - 1) + (b - 1); }
// Symmetric index for spatial a, b in either order: 11,12,13,22,23,33.
constexpr int sym_index(int a, int b) {
  if (a > b) {
    const int t = a;
    a = b;
    b = t;
  }
  constexpr int table[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
  return table[a - 1][b - 1];
}
constexpr int weyl_e(int a, int b) { return kWeylE + sym_index(a, b); }
constexpr int weyl_b(int a, int b) { return kWeylB + sym_index(a, b); }
constexpr int entropy_grad(int alpha) { return kEntropyGrad + alpha; }

// Component pairs (a, b) with a <= b in storage order.
constexpr int kSymPairs[6][2] = {{1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}};
constexpr int kAntiPairs[3][2] = {{1, 2}, {1, 3}, {2, 3}};

// Human-readable component names used in snapshot headers.
std::string component_name(int index);
int component_index(const std::string& name);  // -1 if unknown
}  // namespace layout

// Gamma_a^c_b stored as g[a][c][b].
struct Connection {
  double g[4][4][4] = {};
  double operator()(int a, int c, int b) const { return g[a][c][b]; }
};

// All 64 connection coefficients from the 21 stored ones plus the gauge
// zeros. Linear in the stored values.
Connection expand_connection(const StateVec& z);

// Re-extracts the stored connection entries of a full connection.
void store_connection(const Connection& G, StateVec& z);

// Frame coefficients e^A_mu as a 4x4 array fr[A][mu], with e^A_0 = delta^A_0.
std::array<std::array<double, 4>, 4> frame_matrix(const StateVec& z);

// E or B as a full 4x4 array with vanishing time row and column.
std::array<std::array<double, 4>, 4> weyl_matrix(const StateVec& z, int offset);

struct InducedMetric {
  std::array<std::array<double, 4>, 4> g_upper{};  // g^{AB}
  std::array<std::array<double, 3>, 3> g_t{};      // quadratic form on the slice
  double g_t_min_eig = 0, g_t_max_eig = 0;
};

// g^{AB} = e^A_a e^B_b g^{ab}, and g_t,AB = f^0_A f^0_B - sum_a f^a_A f^a_B
// where d/dx^A = f^a_A e_a + f^0_A d/dt. Throws std::domain_error if the
// spatial frame block is singular.
InducedMetric induced_metric(const StateVec& z);

}  // namespace eee
