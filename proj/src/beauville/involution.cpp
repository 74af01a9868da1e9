#include "coquartic/beauville/involution.hpp"

#include <type_traits>

#include "coquartic/error.hpp"

namespace coq {

namespace {

long pair_precision(const PointPair<Complex>& pair) {
  long prec = kMinPrecision;
  for (int i = 0; i < 4; ++i) prec = std::max({prec, pair.first[i].precision(), pair.second[i].precision()});
  return prec;
}

void require_on_surface(const QuarticSurface& s, const QuadPoint& p) {
  if (!is_zero(s.F().evaluate(p.x)))
    throw Error(ErrorCode::NotOnSurface, "point " + format_point(p) + " is not on the quartic");
}

void require_on_surface(const QuarticSurface& s, const ComplexPoint& p) {
  const long prec = p[0].precision();
  Real r = surface_residual(s.F(), p);
  if (r > Real::pow2(-prec / 4, prec))
    throw Error(ErrorCode::NotOnSurface, "point residual " + r.to_string(6) + " above 2^-" + std::to_string(prec / 4));
}

// Largest modulus among coordinates, as a size for numeric zero tests.
Real max_abs(const Vector4<Complex>& v) {
  Real m(v[0].precision());
  for (const Complex& c : v) m = Real::max(m, c.abs());
  return m;
}

enum class RestrictionState { Ok, LineOnSurface, DegreeDrop };

RestrictionState classify(const UniPoly<QuadExt>& r, const QuarticSurface&, const ParamLine<QuadExt>&) {
  if (r.is_zero()) return RestrictionState::LineOnSurface;
  if (r.degree() < 4) return RestrictionState::DegreeDrop;
  return RestrictionState::Ok;
}

RestrictionState classify(const UniPoly<Complex>& r, const QuarticSurface& s, const ParamLine<Complex>& line) {
  const long prec = r.proto().precision();
  // Natural size of the restriction's coefficients: sum |c| (|a| + |b|)^4.
  Real reach = max_abs(line.a) + max_abs(line.b);
  Real size(prec);
  for (const Term& t : s.F().terms()) size += abs(Real(t.coeff, prec));
  size *= reach * reach * reach * reach;
  const Real tol = Real::pow2(-prec / 4, prec) * size;
  bool all_small = true;
  for (const Complex& c : r.coeffs()) all_small = all_small && c.abs() <= tol;
  if (all_small) return RestrictionState::LineOnSurface;
  if (r.degree() < 4 || r.coeff(4).abs() <= tol) return RestrictionState::DegreeDrop;
  return RestrictionState::Ok;
}

std::pair<QuadExt, QuadExt> residual_roots(const UniPoly<QuadExt>& q) {
  QuadRoots roots = quad_solve(q);
  if (roots.plus == roots.minus)
    throw Error(ErrorCode::CoincidentPoints, "residual intersection is a double point (tangent line)");
  return {roots.plus, roots.minus};
}

// Quadratic formula without cancellation in the larger root.
std::pair<Complex, Complex> residual_roots(const UniPoly<Complex>& q) {
  const Complex& a0 = q.coeffs()[0];
  const Complex& a1 = q.coeffs()[1];
  const Complex& a2 = q.coeffs()[2];
  const long prec = q.proto().precision();
  Complex s = sqrt(a1 * a1 - Complex(4L, 0L, prec) * a2 * a0);
  // pick the sign making |a1 + s| large
  Complex w = a1 + s;
  Complex v = a1 - s;
  if (v.norm() > w.norm()) w = v;
  Complex half_w = -w.scaled(Real(Rational(1, 2), prec));
  if (is_zero(half_w)) return {half_w, half_w};
  return {half_w / a2, a0 / half_w};
}

template <typename F>
InvolutionTrace<F> involution_impl(const QuarticSurface& s, const PointPair<F>& pair) {
  require_on_surface(s, pair.first);
  require_on_surface(s, pair.second);
  const F one = lift(Rational(1), pair.first[0]);

  for (int attempt = 0; attempt < 2; ++attempt) {
    ParamLine<F> line{pair.first.x, pair.first.x};
    F lambda = lift(Rational(attempt + 1), one);
    for (int i = 0; i < 4; ++i) line.b[i] = lambda * pair.second[i] - pair.first[i];
    UniPoly<F> r = restrict(s, line);
    RestrictionState state = classify(r, s, line);
    if (state == RestrictionState::LineOnSurface)
      throw Error(ErrorCode::LineOnSurface, "the line through the pair lies on the quartic");
    if (state == RestrictionState::DegreeDrop) continue;

    UniPoly<F> q = deflate(r);
    if constexpr (!std::is_same_v<F, Complex>) {
      // t = 0 and t = 1 are roots, so the division is exact.
      if (!is_zero(r.coeff(0)) || !is_zero(F(r.coeff(1) + q.coeff(0))))
        throw Error(ErrorCode::NotOnSurface, "restriction does not vanish at the pair");
    }
    auto [tp, tm] = residual_roots(q);
    ProjectivePoint<F> p1(line.at(tp));
    ProjectivePoint<F> p2(line.at(tm));
    return InvolutionTrace<F>{make_point_pair(p1, p2), line, r, q, tp, tm, attempt > 0};
  }
  throw Error(ErrorCode::DegreeDrop, "restriction loses degree under both parametrizations");
}

}  // namespace

PointPair<QuadExt> make_point_pair(const QuadPoint& p, const QuadPoint& q) {
  if (projectively_equal(p, q)) throw Error(ErrorCode::CoincidentPoints, "pair points coincide");
  QuadPoint a = normalized(p);
  QuadPoint b = normalized(q);
  if (canonical_less(b, a)) std::swap(a, b);
  return {a, b};
}

PointPair<Complex> make_point_pair(const ComplexPoint& p, const ComplexPoint& q) {
  const long prec = std::max(p[0].precision(), q[0].precision());
  if (projective_distance(p, q) <= Real::pow2(-prec / 4, prec))
    throw Error(ErrorCode::CoincidentPoints, "pair points coincide within 2^-" + std::to_string(prec / 4));
  ComplexPoint a = normalized(p);
  ComplexPoint b = normalized(q);
  if (canonical_less(b, a)) std::swap(a, b);
  return {a, b};
}

ParamLine<QuadExt> line_through(const PointPair<QuadExt>& pair) {
  ParamLine<QuadExt> line{pair.first.x, pair.first.x};
  for (int i = 0; i < 4; ++i) line.b[i] = pair.second[i] - pair.first[i];
  return line;
}

ParamLine<Complex> line_through(const PointPair<Complex>& pair) {
  ParamLine<Complex> line{pair.first.x, pair.first.x};
  for (int i = 0; i < 4; ++i) line.b[i] = pair.second[i] - pair.first[i];
  return line;
}

InvolutionTrace<QuadExt> involution_trace(const QuarticSurface& s, const PointPair<QuadExt>& pair) {
  return involution_impl(s, pair);
}

InvolutionTrace<Complex> involution_trace(const QuarticSurface& s, const PointPair<Complex>& pair) {
  const long prec = pair_precision(pair);
  PointPair<Complex> wide{ComplexPoint({pair.first[0].widened(prec), pair.first[1].widened(prec),
                                        pair.first[2].widened(prec), pair.first[3].widened(prec)}),
                          ComplexPoint({pair.second[0].widened(prec), pair.second[1].widened(prec),
                                        pair.second[2].widened(prec), pair.second[3].widened(prec)})};
  return involution_impl(s, wide);
}

bool pairs_equal(const PointPair<QuadExt>& x, const PointPair<QuadExt>& y) {
  return (projectively_equal(x.first, y.first) && projectively_equal(x.second, y.second)) ||
         (projectively_equal(x.first, y.second) && projectively_equal(x.second, y.first));
}

Real pair_distance(const PointPair<Complex>& x, const PointPair<Complex>& y) {
  Real straight = Real::max(projective_distance(x.first, y.first), projective_distance(x.second, y.second));
  Real crossed = Real::max(projective_distance(x.first, y.second), projective_distance(x.second, y.first));
  return crossed < straight ? crossed : straight;
}

PointPair<Complex> to_complex(const PointPair<QuadExt>& pair, long precision) {
  return make_point_pair(to_complex(pair.first, precision), to_complex(pair.second, precision));
}

}  // namespace coq
