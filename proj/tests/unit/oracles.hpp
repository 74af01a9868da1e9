#pragma once

// Test-only reference computations. Nothing here calls into the code paths
// it is used to check.

#include <array>
#include <cstdint>
#include <random>
#include <utility>

#include "coquartic/exactalg/rational.hpp"

namespace oracle {

using coq::Rational;
using RatMatrix = std::array<std::array<Rational, 4>, 4>;

/// Determinant by fraction-exact Gaussian elimination with row swaps.
inline Rational gauss_det(RatMatrix a) {
  Rational det = 1;
  for (int col = 0; col < 4; ++col) {
    int pivot = -1;
    for (int r = col; r < 4; ++r) {
      if (sgn(a[r][col]) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (int r = col + 1; r < 4; ++r) {
      Rational f = a[r][col] / a[col][col];
      for (int c = col; c < 4; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

/// Small integers / small rationals from a fixed-seed engine.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  Rational rational(long bound) {
    long num = integer(-bound, bound);
    long den = integer(1, bound);
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle
