#pragma once

#include <array>

#include "coquartic/exactalg/multipoly.hpp"

namespace coq {

/// Row-major 4x4 matrix over a commutative ring R.
template <typename R>
using Matrix4 = std::array<std::array<R, 4>, 4>;

template <typename R>
using Vector4 = std::array<R, 4>;

/// 4x4 matrix of polynomials; T_l(x) is one of these.
using PolyMatrix4 = Matrix4<MultiPoly>;

namespace detail {

// 2x2 minors of rows (r0, r1), indexed by the column pair (c0 < c1) in
// lexicographic order: 01 02 03 12 13 23.
inline constexpr std::array<std::array<int, 2>, 6> kPairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

template <typename R>
std::array<R, 6> minors2(const Matrix4<R>& m, int r0, int r1) {
  std::array<R, 6> out;
  for (std::size_t p = 0; p < kPairs.size(); ++p) {
    auto [c0, c1] = kPairs[p];
    out[p] = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
  }
  return out;
}

}  // namespace detail

/// Determinant via the Laplace expansion along the first two rows.
template <typename R>
R det4(const Matrix4<R>& m) {
  auto top = detail::minors2(m, 0, 1);
  auto bottom = detail::minors2(m, 2, 3);
  // complementary pair of (c0,c1) is index 5 - p; sign (-1)^(c0+c1+0+1)
  constexpr std::array<int, 6> sign{+1, -1, +1, +1, -1, +1};
  R sum = top[0] * bottom[5];
  for (std::size_t p = 1; p < 6; ++p) {
    R term = top[p] * bottom[5 - p];
    if (sign[p] > 0) {
      sum = sum + term;
    } else {
      sum = sum - term;
    }
  }
  return sum;
}

/// Classical adjugate: adj(M)[i][j] = (-1)^(i+j) * minor(M; row j, col i),
/// so that M * adj(M) = adj(M) * M = det(M) * I.
template <typename R>
Matrix4<R> adjugate4(const Matrix4<R>& m) {
  Matrix4<R> adj;
  for (int row = 0; row < 4; ++row) {
    for (int col = 0; col < 4; ++col) {
      std::array<int, 3> rs{};
      std::array<int, 3> cs{};
      for (int k = 0, n = 0; k < 4; ++k)
        if (k != row) rs[n++] = k;
      for (int k = 0, n = 0; k < 4; ++k)
        if (k != col) cs[n++] = k;
      const auto& a = m;
      R minor = a[rs[0]][cs[0]] * (a[rs[1]][cs[1]] * a[rs[2]][cs[2]] - a[rs[1]][cs[2]] * a[rs[2]][cs[1]]) -
                a[rs[0]][cs[1]] * (a[rs[1]][cs[0]] * a[rs[2]][cs[2]] - a[rs[1]][cs[2]] * a[rs[2]][cs[0]]) +
                a[rs[0]][cs[2]] * (a[rs[1]][cs[0]] * a[rs[2]][cs[1]] - a[rs[1]][cs[1]] * a[rs[2]][cs[0]]);
      adj[col][row] = ((row + col) % 2 == 0) ? minor : R(-minor);
    }
  }
  return adj;
}

template <typename R>
Matrix4<R> multiply(const Matrix4<R>& a, const Matrix4<R>& b) {
  Matrix4<R> out;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      R s = a[i][0] * b[0][j];
      for (int k = 1; k < 4; ++k) s = s + a[i][k] * b[k][j];
      out[i][j] = s;
    }
  }
  return out;
}

template <typename R>
Vector4<R> multiply(const Matrix4<R>& a, const Vector4<R>& v) {
  Vector4<R> out;
  for (int i = 0; i < 4; ++i) {
    R s = a[i][0] * v[0];
    for (int k = 1; k < 4; ++k) s = s + a[i][k] * v[k];
    out[i] = s;
  }
  return out;
}

/// Row vector times matrix.
template <typename R>
Vector4<R> multiply(const Vector4<R>& v, const Matrix4<R>& a) {
  Vector4<R> out;
  for (int j = 0; j < 4; ++j) {
    R s = v[0] * a[0][j];
    for (int k = 1; k < 4; ++k) s = s + v[k] * a[k][j];
    out[j] = s;
  }
  return out;
}

template <typename R>
Matrix4<R> transpose(const Matrix4<R>& a) {
  Matrix4<R> t;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) t[i][j] = a[j][i];
  return t;
}

/// Evaluates a polynomial matrix at a point over any coordinate ring.
template <typename F>
Matrix4<F> evaluate(const PolyMatrix4& m, const Vector4<F>& x) {
  Matrix4<F> out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[i][j] = m[i][j].evaluate(x);
  return out;
}

}  // namespace coq
