#include "coquartic/exactalg/hpreal.hpp"

#include <algorithm>
#include <limits>
#include <memory>

namespace coq {

namespace {

mpfr_prec_t checked(long precision) {
  return static_cast<mpfr_prec_t>(std::max(precision, static_cast<long>(MPFR_PREC_MIN)));
}

}  // namespace

Real::Real(long precision) {
  mpfr_init2(value_, checked(precision));
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, long precision) {
  mpfr_init2(value_, checked(precision));
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(double value, long precision) {
  mpfr_init2(value_, checked(precision));
  mpfr_set_d(value_, value, MPFR_RNDN);
}

Real::Real(const Rational& value, long precision) {
  mpfr_init2(value_, checked(precision));
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::widened(long precision) const {
  Real r(*this);
  r.widen_to(precision);
  return r;
}

Real Real::rounded(long precision) const {
  Real r(*this);
  mpfr_prec_round(r.value_, checked(precision), MPFR_RNDN);
  return r;
}

void Real::widen_to(long precision) {
  if (precision > this->precision()) mpfr_prec_round(value_, checked(precision), MPFR_RNDN);
}

std::string Real::to_string(int digits) const {
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.*Re", digits - 1, value_);
  std::unique_ptr<char, decltype(&mpfr_free_str)> holder(raw, &mpfr_free_str);
  return std::string(raw);
}

long Real::exponent() const {
  if (mpfr_zero_p(value_)) return std::numeric_limits<long>::min() / 2;
  return static_cast<long>(mpfr_get_exp(value_));
}

Real& Real::operator+=(const Real& o) {
  widen_to(o.precision());
  mpfr_add(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& o) {
  widen_to(o.precision());
  mpfr_sub(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& o) {
  widen_to(o.precision());
  mpfr_mul(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& o) {
  widen_to(o.precision());
  mpfr_div(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real r(*this);
  mpfr_neg(r.value_, r.value_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const Real& x, const Real& y) {
  if (mpfr_unordered_p(x.value_, y.value_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(x.value_, y.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

Real sqrt(const Real& x) {
  Real r(x.precision());
  mpfr_sqrt(r.value_, x.value_, MPFR_RNDN);
  return r;
}

Real abs(const Real& x) {
  Real r(x.precision());
  mpfr_abs(r.value_, x.value_, MPFR_RNDN);
  return r;
}

Real log(const Real& x) {
  Real r(x.precision());
  mpfr_log(r.value_, x.value_, MPFR_RNDN);
  return r;
}

Real hypot(const Real& x, const Real& y) {
  Real r(std::max(x.precision(), y.precision()));
  mpfr_hypot(r.value_, x.value_, y.value_, MPFR_RNDN);
  return r;
}

Real Real::pow2(long k, long precision) {
  Real r(1L, precision);
  mpfr_mul_2si(r.value_, r.value_, k, MPFR_RNDN);
  return r;
}

Real Real::pi(long precision) {
  Real r(precision);
  mpfr_const_pi(r.value_, MPFR_RNDN);
  return r;
}

void sin_cos(const Real& x, Real& s, Real& c) {
  s = Real(x.precision());
  c = Real(x.precision());
  mpfr_sin_cos(s.value_, c.value_, x.value_, MPFR_RNDN);
}

std::ostream& operator<<(std::ostream& os, const Real& x) { return os << x.to_string(); }

Complex::Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}

Complex& Complex::operator+=(const Complex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  Real re = re_ * o.re_ - im_ * o.im_;
  Real im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  Real den = o.norm();
  Real re = (re_ * o.re_ + im_ * o.im_) / den;
  Real im = (im_ * o.re_ - re_ * o.im_) / den;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Complex Complex::polar(const Real& r, const Real& theta) {
  Real s(theta.precision());
  Real c(theta.precision());
  sin_cos(theta, s, c);
  return Complex(r * c, r * s);
}

Complex sqrt(const Complex& z) {
  long prec = z.precision();
  if (is_zero(z)) return Complex(prec);
  Real r = z.abs();
  Real half(0.5, prec);
  Real re = sqrt((r + abs(z.re())) * half);
  Real other = abs(z.im()) / (re + re);
  if (z.re().sign() >= 0) {
    return Complex(re, z.im().sign() < 0 ? -other : other);
  }
  return Complex(other, z.im().sign() < 0 ? -re : re);
}

std::ostream& operator<<(std::ostream& os, const Complex& z) {
  return os << "(" << z.re().to_string() << ", " << z.im().to_string() << ")";
}

}  // namespace coq
