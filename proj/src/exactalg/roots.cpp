#include "coquartic/exactalg/roots.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>

#include "coquartic/error.hpp"

namespace coq {

Real evaluation_scale(const UniPoly<Complex>& p, const Complex& t) {
  Real r = t.abs();
  Real scale(p.proto().precision());
  for (std::size_t i = p.coeffs().size(); i-- > 0;) scale = scale * r + p.coeffs()[i].abs();
  return scale;
}

Real residual_tolerance(long precision) { return Real::pow2(-precision / 2, precision); }

namespace {

// p(z) and p'(z) by a single Horner pass.
void horner2(const std::vector<Complex>& c, const Complex& z, Complex& value, Complex& slope) {
  value = c.back();
  slope = Complex(z.precision());
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    slope = slope * z + value;
    value = value * z + c[i];
  }
}

}  // namespace

std::vector<Complex> roots_hp(const UniPoly<Complex>& p, const RootOptions& options) {
  if (p.degree() < 1) throw Error(ErrorCode::DegreeMismatch, "roots_hp needs degree >= 1");
  const long prec = std::max({options.precision, kMinPrecision, p.proto().precision()});
  const int n = p.degree();

  std::vector<Complex> c;
  c.reserve(p.coeffs().size());
  for (const Complex& x : p.coeffs()) c.push_back(x.widened(prec));

  if (n == 1) return {-(c[0] / c[1])};

  // Starting radius: the largest of |c_i / c_n|^(1/(n-i)), doubled (Fujiwara-type bound).
  const Real lead = c[static_cast<std::size_t>(n)].abs();
  double radius = 0.0;
  for (int i = 0; i < n; ++i) {
    double ratio = (c[static_cast<std::size_t>(i)].abs() / lead).to_double();
    if (ratio > 0) radius = std::max(radius, std::pow(ratio, 1.0 / (n - i)));
  }
  radius = radius > 0 ? 2.0 * radius : 1.0;

  std::vector<Complex> z;
  const Real two_pi = Real::pi(prec) * Real(2L, prec);
  for (int k = 0; k < n; ++k) {
    Real angle = two_pi * Real(static_cast<long>(k), prec) / Real(static_cast<long>(n), prec) + Real(0.4, prec);
    z.push_back(Complex::polar(Real(radius, prec), angle));
  }

  const int budget = options.max_iterations > 0 ? options.max_iterations : static_cast<int>(4 * prec + 100);
  const Real eps = Real::pow2(-(prec - 8), prec);
  const Real tiny = Real::pow2(-prec, prec);
  std::vector<bool> done(static_cast<std::size_t>(n), false);
  Complex value(prec);
  Complex slope(prec);
  const Complex one(1L, 0L, prec);

  for (int iter = 0; iter < budget; ++iter) {
    bool all_done = true;
    for (int k = 0; k < n; ++k) {
      auto kk = static_cast<std::size_t>(k);
      if (done[kk]) continue;
      horner2(c, z[kk], value, slope);
      if (is_zero(value)) {
        done[kk] = true;
        continue;
      }
      Complex sum(prec);
      for (int j = 0; j < n; ++j) {
        if (j == k) continue;
        Complex diff = z[kk] - z[static_cast<std::size_t>(j)];
        if (!is_zero(diff)) sum += one / diff;
      }
      Complex step(prec);
      if (is_zero(slope)) {
        // Stationary point: nudge off it.
        step = Complex(Real::pow2(-prec / 4, prec), Real::pow2(-prec / 4, prec));
      } else {
        Complex ratio = value / slope;
        Complex denom = one - ratio * sum;
        step = is_zero(denom) ? ratio : ratio / denom;
      }
      z[kk] -= step;
      Real mag = Real::max(z[kk].abs(), Real(1L, prec));
      if (step.abs() <= eps * mag || step.abs() <= tiny) {
        done[kk] = true;
      } else {
        all_done = false;
      }
    }
    if (all_done) break;
  }

  const Real tol = residual_tolerance(prec);
  UniPoly<Complex> working(c, c[0]);
  for (const Complex& r : z) {
    Real residual = working(r).abs();
    if (residual > tol * evaluation_scale(working, r)) {
      throw Error(ErrorCode::NonConvergence,
                  "root residual " + residual.to_string(6) + " above tolerance after " + std::to_string(budget) +
                      " iterations");
    }
  }
  return z;
}

namespace {

QuadRoots solve_impl(const QuadExt& a, const QuadExt& b, const QuadExt& c, bool irrational_coeffs) {
  QuadExt disc = b * b - QuadExt(4) * a * c;
  QuadExt root;
  Integer d = disc.d();
  if (disc.is_rational()) {
    Rational r;
    if (rational_sqrt(disc.a(), r)) {
      root = QuadExt(r, 0, d);
    } else {
      // sqrt(p/q) = sqrt(p q) / q = k sqrt(s) / q with p q = s k^2
      Integer pq = disc.a().get_num() * disc.a().get_den();
      Integer s = squarefree_part(pq);
      if (irrational_coeffs && d != 0 && s != d) {
        if (!sqrt_in_field(disc, root))
          throw Error(ErrorCode::NestedExtension,
                      "discriminant needs Q(sqrt " + s.get_str() + ") over Q(sqrt " + d.get_str() + ")");
      } else {
        Rational k2(pq / s);
        Rational k;
        rational_sqrt(k2, k);
        root = QuadExt(0, k / Rational(disc.a().get_den()), s);
        d = s;
      }
    }
  } else if (!sqrt_in_field(disc, root)) {
    throw Error(ErrorCode::NestedExtension, "discriminant is not a square in Q(sqrt " + d.get_str() + ")");
  }
  QuadExt two_a = QuadExt(2) * a;
  QuadRoots out{(-b + root) / two_a, (-b - root) / two_a, 0};
  bool rational = out.plus.is_rational() && out.minus.is_rational();
  out.d = rational ? Integer(0) : (out.plus.is_rational() ? out.minus.d() : out.plus.d());
  return out;
}

}  // namespace

QuadRoots quad_solve(const UniPoly<Rational>& q) {
  if (q.degree() != 2) throw Error(ErrorCode::DegreeMismatch, "quad_solve needs degree exactly 2");
  return solve_impl(QuadExt(q.coeffs()[2]), QuadExt(q.coeffs()[1]), QuadExt(q.coeffs()[0]), false);
}

QuadRoots quad_solve(const UniPoly<QuadExt>& q) {
  if (q.degree() != 2) throw Error(ErrorCode::DegreeMismatch, "quad_solve needs degree exactly 2");
  bool irrational = false;
  for (const QuadExt& x : q.coeffs()) irrational = irrational || !x.is_rational();
  return solve_impl(q.coeffs()[2], q.coeffs()[1], q.coeffs()[0], irrational);
}

}  // namespace coq
