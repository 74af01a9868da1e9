#include "coquartic/exactalg/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "coquartic/error.hpp"

namespace coq {

Monomial::Monomial(int e0, int e1, int e2, int e3) {
  const std::array<int, kNumVars> e{e0, e1, e2, e3};
  std::uint64_t degree = 0;
  for (int i = 0; i < kNumVars; ++i) {
    if (e[i] < 0 || e[i] > 0xFFF) throw std::out_of_range("monomial exponent out of range");
    key_ |= static_cast<std::uint64_t>(e[i]) << (36 - 12 * i);
    degree += static_cast<std::uint64_t>(e[i]);
  }
  key_ |= degree << 48;
}

Monomial Monomial::var(int i) {
  std::array<int, kNumVars> e{};
  e.at(i) = 1;
  return Monomial(e[0], e[1], e[2], e[3]);
}

bool Monomial::divides(Monomial other) const {
  for (int i = 0; i < kNumVars; ++i) {
    if (exponent(i) > other.exponent(i)) return false;
  }
  return true;
}

MultiPoly::MultiPoly(const Rational& c) {
  if (sgn(c) != 0) terms_.push_back({Monomial(), c});
}

MultiPoly MultiPoly::var(int i) { return monomial(Rational(1), Monomial::var(i)); }

MultiPoly MultiPoly::monomial(const Rational& c, Monomial m) {
  MultiPoly p;
  if (sgn(c) != 0) p.terms_.push_back({m, c});
  return p;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono > b.mono; });
  MultiPoly p;
  for (Term& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
  return p;
}

bool MultiPoly::is_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [d = degree()](const Term& t) { return t.mono.degree() == d; });
}

Rational MultiPoly::coeff(Monomial m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, Monomial key) { return t.mono > key; });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return Rational(0);
}

namespace {

// Merges b * sign into a.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->mono > j->mono)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->mono > i->mono) {
      out.push_back({j->mono, subtract ? Rational(-j->coeff) : j->coeff});
      ++j;
    } else {
      Rational c = subtract ? Rational(i->coeff - j->coeff) : Rational(i->coeff + j->coeff);
      if (sgn(c) != 0) out.push_back({i->mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p(*this);
  for (Term& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
  if (sgn(c) == 0) return {};
  MultiPoly p(*this);
  for (Term& t : p.terms_) t.coeff *= c;
  return p;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::unordered_map<std::uint64_t, Rational> acc;
  acc.reserve(a.size() * b.size());
  Rational prod;
  for (const Term& s : a.terms_) {
    for (const Term& t : b.terms_) {
      mpq_mul(prod.get_mpq_t(), s.coeff.get_mpq_t(), t.coeff.get_mpq_t());
      acc[(s.mono * t.mono).key()] += prod;
    }
  }
  std::vector<std::pair<std::uint64_t, Rational>> flat(acc.begin(), acc.end());
  std::sort(flat.begin(), flat.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
  MultiPoly p;
  p.terms_.reserve(flat.size());
  for (auto& [key, c] : flat) {
    if (sgn(c) == 0) continue;
    p.terms_.push_back({Monomial::from_key(key), std::move(c)});
  }
  return p;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

MultiPoly MultiPoly::derivative(int i) const {
  std::vector<Term> out;
  for (const Term& t : terms_) {
    int e = t.mono.exponent(i);
    if (e == 0) continue;
    std::array<int, kNumVars> ex{};
    for (int k = 0; k < kNumVars; ++k) ex[k] = t.mono.exponent(k);
    ex[i] -= 1;
    out.push_back({Monomial(ex[0], ex[1], ex[2], ex[3]), t.coeff * e});
  }
  return from_terms(std::move(out));
}

MultiPoly MultiPoly::substitute(const std::array<MultiPoly, kNumVars>& x) const {
  return evaluate(x);
}

DivisionResult mv_divide(const MultiPoly& f, const MultiPoly& g) {
  if (g.is_zero()) throw Error(ErrorCode::DivisionByZeroPolynomial, "divisor is the zero polynomial");
  const Term& lead = g.leading();
  std::map<std::uint64_t, Rational, std::greater<>> work;
  for (const Term& t : f.terms()) work.emplace(t.mono.key(), t.coeff);

  std::vector<Term> quotient;
  std::vector<Term> remainder;
  while (!work.empty()) {
    auto top = work.begin();
    Monomial m = Monomial::from_key(top->first);
    if (!lead.mono.divides(m)) {
      remainder.push_back({m, std::move(top->second)});
      work.erase(top);
      continue;
    }
    Monomial qm = lead.mono.quotient_of(m);
    Rational qc = top->second / lead.coeff;
    for (const Term& t : g.terms()) {
      std::uint64_t key = (qm * t.mono).key();
      auto [it, inserted] = work.try_emplace(key, 0);
      it->second -= qc * t.coeff;
      if (sgn(it->second) == 0) work.erase(it);
    }
    quotient.push_back({qm, std::move(qc)});
  }
  // Both sequences were produced in decreasing order already.
  return {MultiPoly::from_terms(std::move(quotient)), MultiPoly::from_terms(std::move(remainder))};
}

std::string format_poly(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const Term& t : p.terms()) {
    if (!first) out << " + ";
    first = false;
    out << format_rational(t.coeff);
    for (int i = 0; i < kNumVars; ++i) out << " x" << i << "^" << t.mono.exponent(i);
  }
  return out.str();
}

MultiPoly parse_poly(std::string_view text) {
  std::vector<Term> terms;
  std::string s(text);
  // Split on " + " separators; a coefficient may itself start with '-'.
  std::vector<std::string> chunks;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(" + ", start);
    chunks.push_back(s.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
    if (pos == std::string::npos) break;
    start = pos + 3;
  }
  if (chunks.size() == 1) {
    std::string trimmed;
    for (char c : chunks[0])
      if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    if (trimmed == "0") return {};
  }
  for (std::size_t n = 0; n < chunks.size(); ++n) {
    std::istringstream in(chunks[n]);
    std::string token;
    if (!(in >> token)) throw Error(ErrorCode::ParseError, "empty term " + std::to_string(n));
    Rational c = parse_rational(token);
    std::array<int, kNumVars> e{};
    std::array<bool, kNumVars> seen{};
    while (in >> token) {
      if (token.size() < 4 || token[0] != 'x' || token[2] != '^' || token[1] < '0' || token[1] > '3')
        throw Error(ErrorCode::ParseError, "bad factor \"" + token + "\" in term " + std::to_string(n));
      int var = token[1] - '0';
      if (seen[var]) throw Error(ErrorCode::ParseError, "repeated variable in term " + std::to_string(n));
      seen[var] = true;
      Rational ex = parse_rational(token.substr(3));
      if (ex.get_den() != 1 || sgn(ex) < 0 || ex > 0xFFF)
        throw Error(ErrorCode::ParseError, "bad exponent in term " + std::to_string(n));
      e[var] = static_cast<int>(ex.get_num().get_si());
    }
    terms.push_back({Monomial(e[0], e[1], e[2], e[3]), c});
  }
  return MultiPoly::from_terms(std::move(terms));
}

}  // namespace coq
