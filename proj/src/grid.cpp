#include "eee/grid.hpp"

#include <stdexcept>
#include <string>

namespace eee {

Grid::Grid(int n_, double length_, int fd_order_) : n(n_), length(length_), fd_order(fd_order_) {
  validate();
}

void Grid::validate() const {
  if (fd_order != 2 && fd_order != 4)
    throw std::invalid_argument("fd_order must be 2 or 4, got " + std::to_string(fd_order));
  if (n < 2 * fd_order)
    throw std::invalid_argument("grid needs n >= 2*fd_order, got n=" + std::to_string(n));
  if (!(length > 0.0)) throw std::invalid_argument("grid length must be positive");
}

std::size_t Grid::index(int i, int j, int k) const {
  auto wrap = [this](int x) { return ((x % n) + n) % n; };
  return static_cast<std::size_t>(wrap(i)) +
         static_cast<std::size_t>(n) * (static_cast<std::size_t>(wrap(j)) +
                                        static_cast<std::size_t>(n) * wrap(k));
}

void Grid::coords(std::size_t p, int& i, int& j, int& k) const {
  i = static_cast<int>(p % n);
  j = static_cast<int>((p / n) % n);
  k = static_cast<int>(p / (static_cast<std::size_t>(n) * n));
}

FieldSet::FieldSet(const Grid& g) : grid_(g), data_(static_cast<std::size_t>(kStateSize) * g.size(), 0.0) {}

StateVec FieldSet::point(std::size_t p) const {
  StateVec z;
  for (int c = 0; c < kStateSize; ++c) z[c] = at(c, p);
  return z;
}

void FieldSet::set_point(std::size_t p, const StateVec& z) {
  for (int c = 0; c < kStateSize; ++c) at(c, p) = z[c];
}

namespace {

// Offsets of the neighbors at +-1, +-2, +-3 along an axis.
struct Neighbors {
  std::size_t m[4], pl[4];
};

inline Neighbors neighbors(const Grid& g, std::size_t p, int axis, int reach) {
  int ijk[3];
  g.coords(p, ijk[0], ijk[1], ijk[2]);
  Neighbors nb{};
  for (int s = 1; s <= reach; ++s) {
    int a[3] = {ijk[0], ijk[1], ijk[2]};
    int b[3] = {ijk[0], ijk[1], ijk[2]};
    a[axis] -= s;
    b[axis] += s;
    nb.m[s] = g.index(a[0], a[1], a[2]);
    nb.pl[s] = g.index(b[0], b[1], b[2]);
  }
  return nb;
}

}  // namespace

double fd_derivative(const Grid& g, const double* f, int axis, std::size_t p) {
  const double h = g.h();
  if (g.fd_order == 2) {
    const Neighbors nb = neighbors(g, p, axis, 1);
    return (f[nb.pl[1]] - f[nb.m[1]]) / (2.0 * h);
  }
  const Neighbors nb = neighbors(g, p, axis, 2);
  return (8.0 * (f[nb.pl[1]] - f[nb.m[1]]) - (f[nb.pl[2]] - f[nb.m[2]])) / (12.0 * h);
}

void fd_derivative(const Grid& g, const double* f, int axis, double* out) {
  const std::size_t N = g.size();
  for (std::size_t p = 0; p < N; ++p) out[p] = fd_derivative(g, f, axis, p);
}

void spatial_jet(const FieldSet& fs, std::size_t p, StateJet& jet) {
  const Grid& g = fs.grid();
  const double h = g.h();
  for (int axis = 0; axis < 3; ++axis) {
    const Neighbors nb = neighbors(g, p, axis, g.fd_order / 2);
    StateVec& d = jet[axis + 1];
    for (int c = 0; c < kStateSize; ++c) {
      const double* f = fs.component(c);
      if (g.fd_order == 2)
        d[c] = (f[nb.pl[1]] - f[nb.m[1]]) / (2.0 * h);
      else
        d[c] = (8.0 * (f[nb.pl[1]] - f[nb.m[1]]) - (f[nb.pl[2]] - f[nb.m[2]])) / (12.0 * h);
    }
  }
}

double ko_dissipation(const Grid& g, const double* f, double sigma, std::size_t p) {
  if (sigma == 0.0) return 0.0;
  const double h = g.h();
  double sum = 0.0;
  for (int axis = 0; axis < 3; ++axis) {
    if (g.fd_order == 2) {
      const Neighbors nb = neighbors(g, p, axis, 2);
      sum -= (f[nb.m[2]] + f[nb.pl[2]] - 4.0 * (f[nb.m[1]] + f[nb.pl[1]]) + 6.0 * f[p]) / (16.0 * h);
    } else {
      const Neighbors nb = neighbors(g, p, axis, 3);
      sum += (f[nb.m[3]] + f[nb.pl[3]] - 6.0 * (f[nb.m[2]] + f[nb.pl[2]]) +
              15.0 * (f[nb.m[1]] + f[nb.pl[1]]) - 20.0 * f[p]) /
             (64.0 * h);
    }
  }
  return sigma * sum;
}

}  // namespace eee
