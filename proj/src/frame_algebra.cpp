#include "eee/frame_algebra.hpp"

#include <stdexcept>

namespace eee {

double levi_civita(int a, int b, int c, int d) {
  const int p[4] = {a, b, c, d};
  for (int i = 0; i < 4; ++i) {
    if (p[i] < 0 || p[i] > 3) return 0.0;
    for (int j = i + 1; j < 4; ++j)
      if (p[i] == p[j]) return 0.0;
  }
  int inversions = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (p[i] > p[j]) ++inversions;
  return (inversions % 2 == 0) ? 1.0 : -1.0;
}

double levi_civita_mixed(int a, int b, int c, int d, unsigned raised_mask) {
  const int idx[4] = {a, b, c, d};
  double v = levi_civita(a, b, c, d);
  for (int s = 0; s < 4; ++s)
    if (raised_mask & (1u << s)) v *= eta(idx[s]);
  return v;
}

double eps3_mixed(int a, int b, int c, unsigned raised_mask) {
  const int idx[3] = {a, b, c};
  double v = eps3(a, b, c);
  for (int s = 0; s < 3; ++s)
    if (raised_mask & (1u << s)) v *= eta(idx[s]);
  return v;
}

template <std::size_t Rank>
FrameTensor<Rank> raise_lower(const FrameTensor<Rank>& t, std::size_t slot) {
  if (slot >= Rank) throw std::out_of_range("raise_lower: index slot out of range");
  std::size_t stride = 1;
  for (std::size_t i = slot + 1; i < Rank; ++i) stride *= 4;
  FrameTensor<Rank> out = t;
  for (std::size_t k = 0; k < out.size(); ++k) {
    const int value = static_cast<int>((k / stride) % 4);
    out[k] *= eta(value);
  }
  return out;
}

template FrameTensor<1> raise_lower<1>(const FrameTensor<1>&, std::size_t);
template FrameTensor<2> raise_lower<2>(const FrameTensor<2>&, std::size_t);
template FrameTensor<3> raise_lower<3>(const FrameTensor<3>&, std::size_t);
template FrameTensor<4> raise_lower<4>(const FrameTensor<4>&, std::size_t);

EpsContraction eps3_contract(const std::array<std::array<double, 4>, 4>& a) {
  EpsContraction r;
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) {
      double lhs = 0.0, rhs = 0.0;
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          double e = 0.0;
          for (int m = 0; m < 4; ++m) e += eps3_mixed(m, x, c, 0b111) * eps3(m, y, d);
          lhs += e * a[c][d];
          const double pp = projector_mixed(x, y) * projector_mixed(c, d) -
                            projector_mixed(x, d) * projector_mixed(c, y);
          rhs += -pp * a[c][d];
        }
      r.lhs[x][y] = lhs;
      r.rhs[x][y] = rhs;
    }
  return r;
}

std::array<std::array<double, 4>, 4> eps3_double_trace() {
  std::array<std::array<double, 4>, 4> r{};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) r[a][b] += eps3_mixed(m, n, a, 0b111) * eps3(m, n, b);
  return r;
}

std::array<std::array<double, 4>, 4> sym(const std::array<std::array<double, 4>, 4>& t) {
  std::array<std::array<double, 4>, 4> r{};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) r[a][b] = 0.5 * (t[a][b] + t[b][a]);
  return r;
}

std::array<std::array<double, 4>, 4> antisym(const std::array<std::array<double, 4>, 4>& t) {
  std::array<std::array<double, 4>, 4> r{};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) r[a][b] = 0.5 * (t[a][b] - t[b][a]);
  return r;
}

}  // namespace eee
