#include "coquartic/tritensor/tensor.hpp"

#include <sstream>

#include "coquartic/error.hpp"
#include "coquartic/rng.hpp"

namespace coq {

bool Tritensor::is_zero() const {
  for (const auto& plane : m)
    for (const auto& row : plane)
      for (const Rational& e : row)
        if (sgn(e) != 0) return false;
  return true;
}

SlotLayout slot_layout(int l) {
  switch (l) {
    case 0: return {0, 1, 2};
    case 1: return {1, 0, 2};
    case 2: return {2, 0, 1};
    default: throw Error(ErrorCode::PreconditionFailed, "contraction index must be 0, 1 or 2");
  }
}

namespace {

// Flat entry index 16 i + 4 j + k of the triple built from (x index, row, col).
int slot_index(const SlotLayout& s, int xi, int row, int col) {
  std::array<int, 3> idx{};
  idx[static_cast<std::size_t>(s.x_slot)] = xi;
  idx[static_cast<std::size_t>(s.row_slot)] = row;
  idx[static_cast<std::size_t>(s.col_slot)] = col;
  return 16 * idx[0] + 4 * idx[1] + idx[2];
}

const Rational& flat_entry(const Tritensor& t, int index) { return t.m[index / 16][(index / 4) % 4][index % 4]; }

Rational& flat_entry(Tritensor& t, int index) { return t.m[index / 16][(index / 4) % 4][index % 4]; }

// Exact nonvanishing test for det T_l: a cheap evaluation first, the full
// polynomial only when the evaluation happens to vanish.
bool quartic_vanishes(const Tritensor& t, int l) {
  const Vector4<Rational> probe{Rational(3), Rational(-5), Rational(7), Rational(11)};
  if (sgn(det4(contract_at(t, l, probe))) != 0) return false;
  return det4(contract(t, l)).is_zero();
}

using Row = std::vector<Rational>;

// Reduced row echelon form in place; returns the pivot column of each
// surviving row.
std::vector<int> rref(std::vector<Row>& a, int cols) {
  std::vector<int> pivots;
  std::size_t r = 0;
  for (int c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && sgn(a[p][static_cast<std::size_t>(c)]) == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    Rational inv = 1 / a[r][static_cast<std::size_t>(c)];
    for (Rational& v : a[r]) v *= inv;
    for (std::size_t q = 0; q < a.size(); ++q) {
      if (q == r || sgn(a[q][static_cast<std::size_t>(c)]) == 0) continue;
      Rational f = a[q][static_cast<std::size_t>(c)];
      for (int k = 0; k < cols; ++k) a[q][static_cast<std::size_t>(k)] -= f * a[r][static_cast<std::size_t>(k)];
    }
    pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  return pivots;
}

}  // namespace

const Rational& slot_entry(const Tritensor& t, int l, int xi, int row, int col) {
  return flat_entry(t, slot_index(slot_layout(l), xi, row, col));
}

FlatMatrix flatten(const Tritensor& t, int axis) {
  FlatMatrix f;
  f.axis = axis;
  // The fixed axis is the contracted slot of T_axis, so the flattening is
  // the block form of that contraction's layout.
  for (int b = 0; b < 4; ++b)
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) f.flat[r][static_cast<std::size_t>(4 * b + c)] = slot_entry(t, axis, b, r, c);
  return f;
}

PolyMatrix4 contract(const Tritensor& t, int l) {
  std::array<MultiPoly, 4> x{MultiPoly::var(0), MultiPoly::var(1), MultiPoly::var(2), MultiPoly::var(3)};
  PolyMatrix4 out;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      std::vector<Term> terms;
      for (int i = 0; i < 4; ++i) terms.push_back({Monomial::var(i), slot_entry(t, l, i, r, c)});
      out[r][c] = MultiPoly::from_terms(std::move(terms));
    }
  }
  return out;
}

std::string to_string(Side s) { return s == Side::Left ? "left" : "right"; }

bool is_degenerate(const Tritensor& t) {
  for (int l = 0; l < 3; ++l)
    if (quartic_vanishes(t, l)) return true;
  return false;
}

Tritensor random_tritensor(std::uint64_t seed, long bound) {
  if (bound < 1) throw Error(ErrorCode::PreconditionFailed, "bound must be at least 1");
  const Rng root(seed);
  for (int attempt = 0; attempt < kGenerationAttempts; ++attempt) {
    Rng rng = root.split(static_cast<std::uint64_t>(attempt));
    Tritensor t;
    for (int e = 0; e < 64; ++e) flat_entry(t, e) = rng.uniform(-bound, bound);
    if (!t.is_zero() && !is_degenerate(t)) return t;
  }
  throw Error(ErrorCode::GenerationFailed,
              "no non-degenerate tensor after " + std::to_string(kGenerationAttempts) + " attempts");
}

Tritensor incidence_tritensor(std::uint64_t seed, const std::vector<IncidenceConstraint>& constraints, long bound) {
  if (bound < 1) throw Error(ErrorCode::PreconditionFailed, "bound must be at least 1");
  if (constraints.size() > 8)
    throw Error(ErrorCode::PreconditionFailed, "at most 8 incidence constraints (4 conditions each on 64 entries)");

  std::vector<Row> eqs;
  for (const IncidenceConstraint& con : constraints) {
    const SlotLayout s = slot_layout(con.l);
    for (int fixed = 0; fixed < 4; ++fixed) {
      Row eq(64);
      for (int i = 0; i < 4; ++i) {
        for (int other = 0; other < 4; ++other) {
          // Right: row `fixed` of T_l(x) y. Left: column `fixed` of y^T T_l(x).
          int row = con.side == Side::Right ? fixed : other;
          int col = con.side == Side::Right ? other : fixed;
          eq[static_cast<std::size_t>(slot_index(s, i, row, col))] += con.x[i] * con.y[other];
        }
      }
      eqs.push_back(std::move(eq));
    }
  }
  const std::vector<int> pivots = rref(eqs, 64);
  std::array<bool, 64> is_pivot{};
  for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  const Rng root(seed);
  for (int attempt = 0; attempt < kGenerationAttempts; ++attempt) {
    Rng rng = root.split(static_cast<std::uint64_t>(attempt));
    Tritensor t;
    for (int e = 0; e < 64; ++e)
      if (!is_pivot[static_cast<std::size_t>(e)]) flat_entry(t, e) = rng.uniform(-bound, bound);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      Rational v;
      for (int e = 0; e < 64; ++e)
        if (!is_pivot[static_cast<std::size_t>(e)]) v -= eqs[r][static_cast<std::size_t>(e)] * flat_entry(t, e);
      flat_entry(t, pivots[r]) = v;
    }
    if (!t.is_zero() && !is_degenerate(t)) return t;
  }
  throw Error(ErrorCode::InconsistentConstraints,
              "no non-degenerate tensor satisfies the " + std::to_string(constraints.size()) + " constraints");
}

std::string format_tensor(const Tritensor& t) {
  std::ostringstream out;
  for (int i = 0; i < 4; ++i) {
    out << "i=" << i << "\n";
    for (int j = 0; j < 4; ++j) {
      out << " ";
      for (int k = 0; k < 4; ++k) out << " " << format_rational(t.m[i][j][k]);
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace coq
