#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "coquartic/exactalg/rational.hpp"

namespace coq {

namespace detail {
template <typename F>
bool coeff_is_zero(const F& x) {
  return is_zero(x);
}
}  // namespace detail

/// Dense univariate polynomial sum c_i t^i over a field F (Rational, QuadExt
/// or Complex). Coefficients that are exactly zero at the top are trimmed, so
/// the leading coefficient is nonzero unless the polynomial is zero.
///
/// Every instance keeps a zero "prototype" of F so that constants can be
/// lifted into the same field context (radicand or working precision).
template <typename F>
class UniPoly {
 public:
  explicit UniPoly(F proto) : proto_(lift(Rational(0), proto)) {}
  UniPoly(std::vector<F> coeffs, F proto) : proto_(lift(Rational(0), proto)), coeffs_(std::move(coeffs)) { trim(); }

  static UniPoly constant(const F& c) { return UniPoly({c}, c); }
  /// a + b t
  static UniPoly linear(const F& a, const F& b) { return UniPoly({a, b}, a); }

  const std::vector<F>& coeffs() const { return coeffs_; }
  const F& proto() const { return proto_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const F& leading() const { return coeffs_.back(); }
  F coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : proto_; }

  F operator()(const F& t) const {
    F acc = proto_;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * t + coeffs_[i];
    return acc;
  }

  UniPoly derivative() const {
    std::vector<F> d;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * lift(Rational(static_cast<long>(i)), proto_));
    return UniPoly(std::move(d), proto_);
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<F> c(std::max(a.coeffs_.size(), b.coeffs_.size()), a.proto_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return UniPoly(std::move(c), a.proto_);
  }

  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<F> c(std::max(a.coeffs_.size(), b.coeffs_.size()), a.proto_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return UniPoly(std::move(c), a.proto_);
  }

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly(a.proto_);
    std::vector<F> c(a.coeffs_.size() + b.coeffs_.size() - 1, a.proto_);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] = c[i + j] + a.coeffs_[i] * b.coeffs_[j];
    return UniPoly(std::move(c), a.proto_);
  }

  UniPoly operator-() const {
    std::vector<F> c;
    for (const F& x : coeffs_) c.push_back(proto_ - x);
    return UniPoly(std::move(c), proto_);
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Long division by a monic-or-not divisor, highest power first.
  /// Returns (quotient, remainder).
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const {
    std::vector<F> rem = coeffs_;
    int dd = divisor.degree();
    if (degree() < dd) return {UniPoly(proto_), *this};
    std::vector<F> quot(coeffs_.size() - static_cast<std::size_t>(dd), proto_);
    for (int k = degree() - dd; k >= 0; --k) {
      F q = rem[static_cast<std::size_t>(k + dd)] / divisor.leading();
      quot[static_cast<std::size_t>(k)] = q;
      for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] = rem[static_cast<std::size_t>(k + j)] - q * divisor.coeffs_[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(dd));
    return {UniPoly(std::move(quot), proto_), UniPoly(std::move(rem), proto_)};
  }

 private:
  void trim() {
    while (!coeffs_.empty() && detail::coeff_is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  F proto_;
  std::vector<F> coeffs_;
};

template <typename F>
bool is_zero(const UniPoly<F>& p) {
  return p.is_zero();
}

template <typename F>
UniPoly<F> lift(const Rational& q, const UniPoly<F>& proto) {
  return UniPoly<F>({lift(q, proto.proto())}, proto.proto());
}

}  // namespace coq
