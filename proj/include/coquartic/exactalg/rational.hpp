#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace coq {

using Integer = mpz_class;
/// GMP keeps mpq_class canonical (positive denominator, reduced) after every
/// arithmetic operation.
using Rational = mpq_class;

/// num/den reduced to canonical form (mpq_class(num, den) alone is not).
inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Accepts "p" or "p/q" with optional leading sign on p. Throws
/// Error(ParseError) on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Always "p/q", with q = 1 written out.
std::string format_rational(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline Rational lift(const Rational& q, const Rational& /*proto*/) { return q; }

/// Square-free part of a nonzero integer (sign kept): n = s * k^2.
Integer squarefree_part(const Integer& n);

/// Returns true and sets root when q is the square of a rational.
bool rational_sqrt(const Rational& q, Rational& root);

}  // namespace coq
