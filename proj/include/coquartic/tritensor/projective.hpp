#pragma once

#include <array>
#include <string>

#include "coquartic/error.hpp"
#include "coquartic/exactalg/hpreal.hpp"
#include "coquartic/exactalg/matrix4.hpp"
#include "coquartic/exactalg/quadext.hpp"

namespace coq {

/// A point of P^3 with coordinates in Rational, QuadExt or Complex. Equality
/// is up to a common nonzero scalar.
template <typename F>
struct ProjectivePoint {
  Vector4<F> x;

  ProjectivePoint() = default;
  explicit ProjectivePoint(Vector4<F> coords) : x(std::move(coords)) {
    if (is_zero_vector()) throw Error(ErrorCode::PreconditionFailed, "projective point with all coordinates zero");
  }

  const F& operator[](int i) const { return x[static_cast<std::size_t>(i)]; }

  bool is_zero_vector() const {
    for (const F& c : x)
      if (!is_zero(c)) return false;
    return true;
  }
};

using RationalPoint = ProjectivePoint<Rational>;
using QuadPoint = ProjectivePoint<QuadExt>;
using ComplexPoint = ProjectivePoint<Complex>;

/// Exact projective equality via vanishing 2x2 minors.
template <typename F>
bool projectively_equal(const ProjectivePoint<F>& p, const ProjectivePoint<F>& q) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (!is_zero(F(p[i] * q[j] - p[j] * q[i]))) return false;
  return true;
}

/// Exact representative with the first nonzero coordinate equal to 1.
template <typename F>
ProjectivePoint<F> normalized(const ProjectivePoint<F>& p) {
  int lead = 0;
  while (is_zero(p[lead])) ++lead;
  F inv = lift(Rational(1), p[lead]) / p[lead];
  Vector4<F> out = p.x;
  for (F& c : out) c = c * inv;
  return ProjectivePoint<F>(std::move(out));
}

/// Numeric representative scaled so the largest-modulus coordinate is 1.
ComplexPoint normalized(const ComplexPoint& p);

/// sin of the Fubini-Study angle: |p ^ q| / (|p| |q|). Zero iff the points
/// coincide projectively; computed from 2x2 minors so small distances keep
/// their relative accuracy.
Real projective_distance(const ComplexPoint& p, const ComplexPoint& q);

ComplexPoint to_complex(const RationalPoint& p, long precision);
ComplexPoint to_complex(const QuadPoint& p, long precision);
QuadPoint to_quad(const RationalPoint& p);

/// Lexicographic order on normalized coordinates (canonical pair ordering).
bool canonical_less(const QuadPoint& p, const QuadPoint& q);
bool canonical_less(const ComplexPoint& p, const ComplexPoint& q);

std::string format_point(const RationalPoint& p);
std::string format_point(const QuadPoint& p);
std::string format_point(const ComplexPoint& p, int digits = 12);

}  // namespace coq
