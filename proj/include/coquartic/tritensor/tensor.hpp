#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "coquartic/exactalg/matrix4.hpp"
#include "coquartic/tritensor/projective.hpp"

namespace coq {

/// Element of W (x) W (x) W, dim W = 4, stored as m[i][j][k].
struct Tritensor {
  std::array<std::array<std::array<Rational, 4>, 4>, 4> m{};

  Rational& operator()(int i, int j, int k) { return m[i][j][k]; }
  const Rational& operator()(int i, int j, int k) const { return m[i][j][k]; }
  bool is_zero() const;
  friend bool operator==(const Tritensor& a, const Tritensor& b) { return a.m == b.m; }
};

/// Which tensor slot carries the contracted coordinate x, and which slots
/// index the rows and columns of T_l(x):
///   l = 0: x at i, rows j, cols k
///   l = 1: x at j, rows i, cols k
///   l = 2: x at k, rows i, cols j
struct SlotLayout {
  int x_slot;
  int row_slot;
  int col_slot;
};
SlotLayout slot_layout(int l);

/// Entry of T at the index triple assembled from (x index, row, col) under
/// the layout of contraction l.
const Rational& slot_entry(const Tritensor& t, int l, int xi, int row, int col);

/// 4 x 16 flattening. flat[row][4 * block + col], where block is the index
/// on the fixed axis and (row, col) are the two remaining indices in order.
struct FlatMatrix {
  int axis = 0;
  std::array<std::array<Rational, 16>, 4> flat{};
};

FlatMatrix flatten(const Tritensor& t, int axis);

/// T_l(x) as a matrix of linear forms.
PolyMatrix4 contract(const Tritensor& t, int l);

/// T_l evaluated at a concrete point, by direct summation.
template <typename F>
Matrix4<F> contract_at(const Tritensor& t, int l, const Vector4<F>& x) {
  F zero = lift(Rational(0), x[0]);
  Matrix4<F> out;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      F s = zero;
      for (int i = 0; i < 4; ++i) {
        const Rational& e = slot_entry(t, l, i, r, c);
        if (sgn(e) != 0) s = s + lift(e, zero) * x[static_cast<std::size_t>(i)];
      }
      out[r][c] = s;
    }
  }
  return out;
}

enum class Side { Left, Right };
std::string to_string(Side s);

/// Forces T_l(x) y = 0 (Right) or y^T T_l(x) = 0 (Left).
struct IncidenceConstraint {
  RationalPoint x;
  RationalPoint y;
  int l = 0;
  Side side = Side::Right;
};

/// Number of generation attempts before GenerationFailed.
inline constexpr int kGenerationAttempts = 16;

/// Integer entries uniform in [-bound, bound], drawn in (i, j, k) order from
/// the attempt's split stream; retried until all three quartics are nonzero.
Tritensor random_tritensor(std::uint64_t seed, long bound = 9);

/// Tensor satisfying every constraint exactly. The constraints are linear in
/// the 64 entries; free entries of the reduced system take random integers
/// in index order (so no constraints reproduces random_tritensor) and the
/// pivot entries follow.
Tritensor incidence_tritensor(std::uint64_t seed, const std::vector<IncidenceConstraint>& constraints,
                              long bound = 9);

/// True when some det T_l vanishes identically.
bool is_degenerate(const Tritensor& t);

std::string format_tensor(const Tritensor& t);

}  // namespace coq
