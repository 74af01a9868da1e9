#pragma once

#include <mpfr.h>

#include <algorithm>
#include <compare>
#include <ostream>
#include <string>

#include "coquartic/exactalg/rational.hpp"

namespace coq {

inline constexpr long kMinPrecision = 64;

/// Owning wrapper around an mpfr_t. Binary operations produce a result at the
/// larger of the two operand precisions; nothing is ever rounded down to a
/// narrower format behind the caller's back.
class Real {
 public:
  explicit Real(long precision = kMinPrecision);
  Real(long value, long precision);
  Real(int value, long precision) : Real(static_cast<long>(value), precision) {}
  Real(double value, long precision);
  Real(const Rational& value, long precision);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  long precision() const { return static_cast<long>(mpfr_get_prec(value_)); }
  /// Copy carried at max(precision(), precision) bits.
  Real widened(long precision) const;
  /// Explicit rounding to exactly `precision` bits (may narrow).
  Real rounded(long precision) const;
  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Scientific notation with the given number of significant digits.
  std::string to_string(int digits = 20) const;
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  /// Binary exponent e with 2^(e-1) <= |x| < 2^e; very negative for zero.
  long exponent() const;

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real operator-() const;

  friend Real operator+(Real x, const Real& y) { return x += y; }
  friend Real operator-(Real x, const Real& y) { return x -= y; }
  friend Real operator*(Real x, const Real& y) { return x *= y; }
  friend Real operator/(Real x, const Real& y) { return x /= y; }

  friend bool operator==(const Real& x, const Real& y) { return mpfr_equal_p(x.value_, y.value_) != 0; }
  friend std::partial_ordering operator<=>(const Real& x, const Real& y);

  friend Real sqrt(const Real& x);
  friend Real abs(const Real& x);
  friend Real log(const Real& x);
  friend Real hypot(const Real& x, const Real& y);
  /// 2^k at the given precision.
  static Real pow2(long k, long precision);
  static Real max(const Real& x, const Real& y) { return x < y ? y : x; }
  static Real pi(long precision);
  friend void sin_cos(const Real& x, Real& s, Real& c);

 private:
  void widen_to(long precision);
  mpfr_t value_;
};

std::ostream& operator<<(std::ostream& os, const Real& x);

/// High-precision complex number (the HPComplex of the domain model).
class Complex {
 public:
  explicit Complex(long precision = kMinPrecision) : re_(precision), im_(precision) {}
  Complex(Real re, Real im);
  Complex(const Rational& re, long precision) : re_(re, precision), im_(0L, precision) {}
  Complex(long re, long im, long precision) : re_(re, precision), im_(im, precision) {}

  const Real& re() const { return re_; }
  const Real& im() const { return im_; }
  long precision() const { return std::max(re_.precision(), im_.precision()); }
  Complex widened(long precision) const { return Complex(re_.widened(precision), im_.widened(precision)); }
  Complex rounded(long precision) const { return Complex(re_.rounded(precision), im_.rounded(precision)); }

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
  Complex operator-() const { return Complex(-re_, -im_); }

  friend Complex operator+(Complex x, const Complex& y) { return x += y; }
  friend Complex operator-(Complex x, const Complex& y) { return x -= y; }
  friend Complex operator*(Complex x, const Complex& y) { return x *= y; }
  friend Complex operator/(Complex x, const Complex& y) { return x /= y; }
  friend bool operator==(const Complex& x, const Complex& y) { return x.re_ == y.re_ && x.im_ == y.im_; }

  Complex conj() const { return Complex(re_, -im_); }
  /// |z|^2
  Real norm() const { return re_ * re_ + im_ * im_; }
  Real abs() const { return hypot(re_, im_); }
  Complex scaled(const Real& s) const { return Complex(re_ * s, im_ * s); }
  static Complex polar(const Real& r, const Real& theta);

 private:
  Real re_;
  Real im_;
};

inline bool is_zero(const Complex& z) { return z.re().is_zero() && z.im().is_zero(); }
inline Complex lift(const Rational& q, const Complex& proto) { return Complex(q, proto.precision()); }

/// Principal square root.
Complex sqrt(const Complex& z);

std::ostream& operator<<(std::ostream& os, const Complex& z);

}  // namespace coq
