#pragma once

#include <ostream>
#include <string>

#include "coquartic/exactalg/rational.hpp"

namespace coq {

/// a + b*sqrt(d) in Q(sqrt d), d square-free.
///
/// d = 0 marks a plain rational that has not been attached to any extension
/// yet; it adopts the radicand of whatever it is combined with. Combining two
/// elements that carry different nonzero radicands throws
/// Error(NestedExtension): towers of extensions are not supported.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  QuadExt(long a) : a_(a) {}                 // NOLINT(google-explicit-constructor)
  QuadExt(Rational a, Rational b, Integer d);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Integer& d() const { return d_; }

  bool is_rational() const { return sgn(b_) == 0; }
  QuadExt conjugate() const { return QuadExt(a_, -b_, d_); }
  /// a^2 - d b^2
  Rational norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o);

  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
  QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }

  /// Value equality: radicands only matter when both irrational parts are nonzero.
  friend bool operator==(const QuadExt& x, const QuadExt& y);

  /// Lexicographic on (a, b); used for canonical ordering only.
  friend bool lex_less(const QuadExt& x, const QuadExt& y);

 private:
  static Integer join(const QuadExt& x, const QuadExt& y);

  Rational a_{0};
  Rational b_{0};
  Integer d_{0};
};

inline bool is_zero(const QuadExt& x) { return sgn(x.a()) == 0 && sgn(x.b()) == 0; }
inline QuadExt lift(const Rational& q, const QuadExt& proto) { return QuadExt(q, 0, proto.d()); }

/// Square root inside the element's own field (Q or Q(sqrt d)). Returns false
/// when no root exists there. A rational non-square with no extension yet is
/// not handled here; see quad_solve.
bool sqrt_in_field(const QuadExt& x, QuadExt& root);

std::string format_quadext(const QuadExt& x);
std::ostream& operator<<(std::ostream& os, const QuadExt& x);

}  // namespace coq
