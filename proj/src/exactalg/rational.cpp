#include "coquartic/exactalg/rational.hpp"

#include <cctype>

#include "coquartic/error.hpp"

namespace coq {

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw Error(ErrorCode::ParseError, "empty integer in \"" + std::string(whole) + "\"");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw Error(ErrorCode::ParseError, "bad digit in \"" + std::string(whole) + "\"");
  }
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  return Integer(s, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto slash = text.find('/');
  Integer num = parse_integer(text.substr(0, slash), text);
  Integer den = 1;
  if (slash != std::string_view::npos) {
    den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in \"" + std::string(text) + "\"");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer squarefree_part(const Integer& n) {
  if (n == 0) return 0;
  Integer rest = abs(n);
  Integer result = 1;
  // Trial division is fine for the discriminants that occur here; a large
  // leftover cofactor is kept as-is unless it is itself a perfect square.
  constexpr unsigned long kTrialLimit = 1'000'000;
  for (unsigned long p = 2; p <= kTrialLimit; p += (p == 2 ? 1 : 2)) {
    Integer pp = Integer(p) * p;
    if (pp > rest) break;
    unsigned count = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      rest /= p;
      ++count;
    }
    if (count % 2 == 1) result *= p;
  }
  if (rest > 1 && !mpz_perfect_square_p(rest.get_mpz_t())) result *= rest;
  return sgn(n) < 0 ? Integer(-result) : result;
}

bool rational_sqrt(const Rational& q, Rational& root) {
  if (sgn(q) < 0) return false;
  const Integer& num = q.get_num();
  const Integer& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return false;
  root = Rational(sqrt(num), sqrt(den));
  root.canonicalize();
  return true;
}

}  // namespace coq
