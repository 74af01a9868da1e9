#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coquartic/exactalg/rational.hpp"

namespace coq {

inline constexpr int kNumVars = 4;

/// Exponent vector (e0, e1, e2, e3) packed into one 64-bit key:
///   [total degree : 16][e0 : 12][e1 : 12][e2 : 12][e3 : 12]
/// Integer comparison of keys is graded-lex order with x0 > x1 > x2 > x3,
/// and multiplying monomials is adding keys.
class Monomial {
 public:
  constexpr Monomial() = default;
  Monomial(int e0, int e1, int e2, int e3);
  static Monomial var(int i);

  int exponent(int i) const { return static_cast<int>((key_ >> (36 - 12 * i)) & 0xFFF); }
  int degree() const { return static_cast<int>(key_ >> 48); }
  std::uint64_t key() const { return key_; }

  bool divides(Monomial other) const;
  /// other / *this; requires divides(other).
  Monomial quotient_of(Monomial other) const { return from_key(other.key_ - key_); }

  friend Monomial operator*(Monomial a, Monomial b) { return from_key(a.key_ + b.key_); }
  friend auto operator<=>(Monomial a, Monomial b) = default;

  static Monomial from_key(std::uint64_t key) {
    Monomial m;
    m.key_ = key;
    return m;
  }

 private:
  std::uint64_t key_ = 0;
};

struct Term {
  Monomial mono;
  Rational coeff;
};

/// Sparse polynomial in x0..x3 over Q. Terms are kept in strictly decreasing
/// graded-lex order with no zero coefficients, so terms().front() is the
/// leading term and equality is structural.
class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  MultiPoly(long c) : MultiPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  MultiPoly(int c) : MultiPoly(Rational(c)) {}   // NOLINT(google-explicit-constructor)
  static MultiPoly var(int i);
  static MultiPoly monomial(const Rational& c, Monomial m);
  /// Builds from arbitrary terms: sorts, merges duplicates, drops zeros.
  static MultiPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term& leading() const { return terms_.front(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.front().mono.degree(); }
  bool is_homogeneous() const;
  /// Rational coefficient of a monomial (0 when absent).
  Rational coeff(Monomial m) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly operator-() const;
  MultiPoly scaled(const Rational& c) const;

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  /// Partial derivative with respect to x_i.
  MultiPoly derivative(int i) const;

  /// Evaluates at a point whose coordinates live in any ring F that supports
  /// +, * and lift(Rational, F).
  template <typename F>
  F evaluate(const std::array<F, kNumVars>& x) const;

  /// Substitutes polynomials for the variables.
  MultiPoly substitute(const std::array<MultiPoly, kNumVars>& x) const;

 private:
  std::vector<Term> terms_;
};

inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }
inline MultiPoly lift(const Rational& q, const MultiPoly& /*proto*/) { return MultiPoly(q); }

/// Division by a single divisor under the fixed graded-lex order:
/// f = q*g + r with no term of r divisible by lt(g). Throws
/// Error(DivisionByZeroPolynomial) when g = 0.
struct DivisionResult {
  MultiPoly quotient;
  MultiPoly remainder;
};
DivisionResult mv_divide(const MultiPoly& f, const MultiPoly& g);

/// Text form: terms in decreasing order joined by " + ", each term
/// "p/q x0^e0 x1^e1 x2^e2 x3^e3"; the zero polynomial is "0".
std::string format_poly(const MultiPoly& p);
/// Inverse of format_poly. Also accepts plain integers as coefficients and
/// arbitrary term order. Throws Error(ParseError).
MultiPoly parse_poly(std::string_view text);

template <typename F>
F MultiPoly::evaluate(const std::array<F, kNumVars>& x) const {
  F zero = lift(Rational(0), x[0]);
  if (terms_.empty()) return zero;
  // Power tables up to the largest exponent per variable.
  std::array<std::vector<F>, kNumVars> powers;
  for (int i = 0; i < kNumVars; ++i) {
    int max_e = 0;
    for (const Term& t : terms_) max_e = std::max(max_e, t.mono.exponent(i));
    powers[i].reserve(max_e + 1);
    powers[i].push_back(lift(Rational(1), x[0]));
    for (int e = 1; e <= max_e; ++e) powers[i].push_back(powers[i].back() * x[i]);
  }
  F sum = zero;
  for (const Term& t : terms_) {
    F v = lift(t.coeff, x[0]);
    for (int i = 0; i < kNumVars; ++i) {
      int e = t.mono.exponent(i);
      if (e > 0) v = v * powers[i][e];
    }
    sum = sum + v;
  }
  return sum;
}

}  // namespace coq
