#include "coquartic/exactalg/quadext.hpp"

#include "coquartic/error.hpp"

namespace coq {

QuadExt::QuadExt(Rational a, Rational b, Integer d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  if (d_ == 0 && sgn(b_) != 0)
    throw Error(ErrorCode::NestedExtension, "irrational part given without a radicand");
}

Integer QuadExt::join(const QuadExt& x, const QuadExt& y) {
  if (x.d_ == 0) return y.d_;
  if (y.d_ == 0 || x.d_ == y.d_) return x.d_;
  if (x.is_rational()) return y.d_;
  if (y.is_rational()) return x.d_;
  throw Error(ErrorCode::NestedExtension,
              "mixing Q(sqrt " + x.d_.get_str() + ") with Q(sqrt " + y.d_.get_str() + ")");
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  d_ = join(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  d_ = join(*this, o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  Integer d = join(*this, o);
  Rational a = a_ * o.a_ + Rational(d) * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  d_ = std::move(d);
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
  if (is_zero(o)) throw std::domain_error("QuadExt division by zero");
  Integer d = join(*this, o);
  QuadExt den(o.a_, o.b_, d);
  Rational n = den.norm();
  *this *= den.conjugate();
  a_ /= n;
  b_ /= n;
  d_ = std::move(d);
  return *this;
}

bool operator==(const QuadExt& x, const QuadExt& y) {
  if (x.a_ != y.a_ || x.b_ != y.b_) return false;
  if (sgn(x.b_) == 0) return true;
  return x.d_ == y.d_;
}

bool lex_less(const QuadExt& x, const QuadExt& y) {
  if (x.a_ != y.a_) return x.a_ < y.a_;
  return x.b_ < y.b_;
}

bool sqrt_in_field(const QuadExt& x, QuadExt& root) {
  Rational r;
  if (x.is_rational()) {
    if (rational_sqrt(x.a(), r)) {
      root = QuadExt(r, 0, x.d());
      return true;
    }
    // a = d v^2 gives root v sqrt(d)
    if (x.d() != 0 && rational_sqrt(x.a() / Rational(x.d()), r)) {
      root = QuadExt(0, r, x.d());
      return true;
    }
    return false;
  }
  // (u + v sqrt d)^2 = alpha + beta sqrt d  =>  u^2 = (alpha +- sqrt(N)) / 2, N = norm.
  Rational s;
  if (!rational_sqrt(x.norm(), s)) return false;
  for (const Rational& u2 : {Rational((x.a() + s) / 2), Rational((x.a() - s) / 2)}) {
    Rational u;
    if (sgn(u2) != 0 && rational_sqrt(u2, u)) {
      Rational v = x.b() / (2 * u);
      root = QuadExt(u, v, x.d());
      return true;
    }
  }
  return false;
}

std::string format_quadext(const QuadExt& x) {
  if (x.is_rational()) return format_rational(x.a());
  return format_rational(x.a()) + " + " + format_rational(x.b()) + "*sqrt(" + x.d().get_str() + ")";
}

std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << format_quadext(x); }

}  // namespace coq
