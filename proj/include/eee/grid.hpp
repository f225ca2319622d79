#pragma once

#include <cstddef>
#include <vector>

#include "eee/state.hpp"

// Periodic cubic grid on the 3-torus and fields of reduced states sampled on it.
namespace eee {

struct Grid {
  int n = 16;                // points per axis
  double length = 6.283185307179586;  // periodic extent per axis
  int fd_order = 4;          // 2 or 4

  Grid() = default;
  Grid(int n_, double length_, int fd_order_);

  double h() const { return length / n; }
  std::size_t size() const { return static_cast<std::size_t>(n) * n * n; }
  // Axis 1 varies fastest.
  std::size_t index(int i, int j, int k) const;
  void coords(std::size_t p, int& i, int& j, int& k) const;
  double coordinate(int i) const { return i * h(); }
  // Throws std::invalid_argument unless fd_order is 2 or 4 and n >= 2 fd_order.
  void validate() const;
};

// Structure-of-arrays storage: component c at point p lives at data[c * N + p].
class FieldSet {
 public:
  FieldSet() = default;
  explicit FieldSet(const Grid& g);

  const Grid& grid() const { return grid_; }
  std::size_t points() const { return grid_.size(); }
  double t = 0.0;

  double* component(int c) { return data_.data() + static_cast<std::size_t>(c) * points(); }
  const double* component(int c) const {
    return data_.data() + static_cast<std::size_t>(c) * points();
  }
  double& at(int c, std::size_t p) { return data_[static_cast<std::size_t>(c) * points() + p]; }
  double at(int c, std::size_t p) const {
    return data_[static_cast<std::size_t>(c) * points() + p];
  }
  StateVec point(std::size_t p) const;
  void set_point(std::size_t p, const StateVec& z);

  std::vector<double>& raw() { return data_; }
  const std::vector<double>& raw() const { return data_; }

 private:
  Grid grid_;
  std::vector<double> data_;
};

// Centered first derivative of a periodic scalar along axis (0, 1, 2) at one point.
double fd_derivative(const Grid& g, const double* f, int axis, std::size_t p);

// Derivative of a whole field along one axis.
void fd_derivative(const Grid& g, const double* f, int axis, double* out);

// All three spatial derivatives of every state component at a point:
// jet[1..3] filled, jet[0] left untouched.
void spatial_jet(const FieldSet& fs, std::size_t p, StateJet& jet);

// Kreiss-Oliger dissipation operator summed over the three axes at a point,
// scaled by sigma. Uses the stencil one order above the derivative stencil.
double ko_dissipation(const Grid& g, const double* f, double sigma, std::size_t p);

}  // namespace eee
