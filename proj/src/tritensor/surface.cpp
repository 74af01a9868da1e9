#include "coquartic/tritensor/surface.hpp"

#include <algorithm>

#include "coquartic/error.hpp"
#include "coquartic/exactalg/roots.hpp"
#include "coquartic/rng.hpp"

namespace coq {

QuarticSurface::QuarticSurface(MultiPoly f, std::string provenance)
    : f_(std::move(f)), provenance_(std::move(provenance)) {
  if (f_.degree() != 4 || !f_.is_homogeneous())
    throw Error(ErrorCode::DegreeMismatch,
                "quartic surface needs a homogeneous degree-4 polynomial, got degree " + std::to_string(f_.degree()));
}

QuarticSurface quartic(const Tritensor& t, int l) {
  MultiPoly f = det4(contract(t, l));
  if (f.is_zero()) throw Error(ErrorCode::DegenerateTensor, "det T" + std::to_string(l) + "(x) is identically zero");
  return QuarticSurface(std::move(f), "T" + std::to_string(l));
}

Real surface_residual(const MultiPoly& f, const ComplexPoint& p) {
  const long prec = p[0].precision();
  Vector4<Complex> x = p.x;
  std::array<Real, 4> ax{x[0].abs(), x[1].abs(), x[2].abs(), x[3].abs()};
  Real scale(prec);
  for (const Term& t : f.terms()) {
    Real v = abs(Real(t.coeff, prec));
    for (int i = 0; i < 4; ++i)
      for (int e = t.mono.exponent(i); e > 0; --e) v *= ax[static_cast<std::size_t>(i)];
    scale += v;
  }
  Real value = f.evaluate(x).abs();
  if (scale.is_zero()) return value;
  return value / scale;
}

Real surface_tolerance(long precision) { return Real::pow2(-precision / 2, precision); }

SampleResult points_on_line(const QuarticSurface& s, const Vector4<Rational>& a, const Vector4<Rational>& b,
                            long precision) {
  SampleResult out;
  UniPoly<Rational> r = restrict_to_line(s.F(), a, b);
  if (r.is_zero()) {
    out.lines_on_surface = 1;
    return out;
  }
  if (r.degree() < 1) return out;  // no affine intersection (all at t = infinity)
  // Guard bits for the root finder; points are rounded back to `precision`.
  const long work = precision + 64;
  std::vector<Complex> c;
  for (const Rational& q : r.coeffs()) c.emplace_back(q, work);
  const Real tol = surface_tolerance(precision);
  for (const Complex& t : roots_hp(UniPoly<Complex>(c, Complex(work)), {work})) {
    Vector4<Complex> x;
    for (int i = 0; i < 4; ++i)
      x[static_cast<std::size_t>(i)] = Complex(a[i], work) + Complex(b[i], work) * t;
    ComplexPoint w = normalized(ComplexPoint(x));
    ComplexPoint p(Vector4<Complex>{w[0].rounded(precision), w[1].rounded(precision), w[2].rounded(precision),
                                    w[3].rounded(precision)});
    if (surface_residual(s.F(), p) <= tol) {
      out.points.push_back(std::move(p));
    } else {
      ++out.rejected;
    }
  }
  return out;
}

SampleResult sample_points(const QuarticSurface& s, std::uint64_t seed, int n, long precision) {
  if (precision < kMinPrecision) throw Error(ErrorCode::PreconditionFailed, "precision must be at least 64 bits");
  const Rng root(seed);
  SampleResult out;
  for (int line = 0; line < n; ++line) {
    Rng rng = root.split(static_cast<std::uint64_t>(line));
    Vector4<Rational> a;
    Vector4<Rational> b;
    // Redraw until the two points span a line.
    do {
      for (auto& v : a) v = rng.uniform(-9, 9);
      for (auto& v : b) v = rng.uniform(-9, 9);
    } while ([&] {
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
          if (a[i] * b[j] != a[j] * b[i]) return false;
      return true;
    }());
    SampleResult part = points_on_line(s, a, b, precision);
    out.lines_on_surface += part.lines_on_surface;
    out.rejected += part.rejected;
    for (ComplexPoint& p : part.points) out.points.push_back(std::move(p));
  }
  return out;
}

SmoothnessReport smoothness_probe(const QuarticSurface& s, const std::vector<ComplexPoint>& points, long precision) {
  SmoothnessReport rep;
  rep.points = points.size();
  rep.threshold = Real::pow2(-precision / 4, precision).to_double();
  std::array<MultiPoly, 4> grad{s.F().derivative(0), s.F().derivative(1), s.F().derivative(2), s.F().derivative(3)};
  Rational cmax;
  for (const Term& t : s.F().terms()) cmax = std::max(cmax, Rational(abs(t.coeff)));

  bool first = true;
  for (std::size_t n = 0; n < points.size(); ++n) {
    ComplexPoint p = normalized(points[n]);
    const long prec = std::max(precision, p[0].precision());
    Real g2(prec);
    for (const MultiPoly& d : grad) g2 += d.evaluate(p.x).norm();
    Real g = sqrt(g2) / Real(cmax, prec);
    const double gd = g.to_double();
    if (first || gd < rep.min_gradient) rep.min_gradient = gd;
    first = false;
    if (gd < rep.threshold) rep.flagged.push_back(n);
  }
  return rep;
}

}  // namespace coq
