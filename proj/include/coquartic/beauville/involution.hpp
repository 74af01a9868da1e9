#pragma once

#include "coquartic/exactalg/roots.hpp"
#include "coquartic/tritensor/surface.hpp"

namespace coq {

/// Unordered pair of distinct points, stored normalized and in canonical
/// (lexicographic) order. Build with make_point_pair.
template <typename F>
struct PointPair {
  ProjectivePoint<F> first;
  ProjectivePoint<F> second;
};

/// Throws CoincidentPoints when p and q agree projectively (numerically:
/// within 2^(-precision/4)).
PointPair<QuadExt> make_point_pair(const QuadPoint& p, const QuadPoint& q);
PointPair<Complex> make_point_pair(const ComplexPoint& p, const ComplexPoint& q);

/// p(t) = a + t b with p(0) the first point and p(1) the second.
template <typename F>
struct ParamLine {
  Vector4<F> a;
  Vector4<F> b;

  Vector4<F> at(const F& t) const {
    Vector4<F> out;
    for (int i = 0; i < 4; ++i) out[i] = a[i] + t * b[i];
    return out;
  }
};

ParamLine<QuadExt> line_through(const PointPair<QuadExt>& pair);
ParamLine<Complex> line_through(const PointPair<Complex>& pair);

template <typename F>
UniPoly<F> restrict(const QuarticSurface& s, const ParamLine<F>& line) {
  return restrict_to_line(s.F(), line.a, line.b);
}

/// The residual quadratic after removing the known roots t = 0 and t = 1:
/// c4 t^4 + c3 t^3 + c2 t^2 + c1 t = (t^2 - t)(a2 t^2 + a1 t + a0).
template <typename F>
UniPoly<F> deflate(const UniPoly<F>& r) {
  F a2 = r.coeff(4);
  F a1 = r.coeff(3) + a2;
  F a0 = r.coeff(2) + a1;
  return UniPoly<F>({a0, a1, a2}, r.proto());
}

template <typename F>
struct InvolutionTrace {
  PointPair<F> result;
  ParamLine<F> line;  // line actually used (after any reparametrization)
  UniPoly<F> restriction;
  UniPoly<F> residual;  // deflated quadratic
  F t_plus;
  F t_minus;
  bool reparametrized = false;
};

/// Residual intersection of the line through the pair with the quartic.
/// Exact over Q(sqrt d) for QuadExt input (rational input is the d = 0
/// case); numeric at the pair's precision otherwise. When the restriction
/// drops degree the line is reparametrized once as p1 + t (2 p2 - p1).
/// Errors: NotOnSurface, LineOnSurface, DegreeDrop, CoincidentPoints,
/// NestedExtension.
InvolutionTrace<QuadExt> involution_trace(const QuarticSurface& s, const PointPair<QuadExt>& pair);
InvolutionTrace<Complex> involution_trace(const QuarticSurface& s, const PointPair<Complex>& pair);

inline PointPair<QuadExt> involution(const QuarticSurface& s, const PointPair<QuadExt>& pair) {
  return involution_trace(s, pair).result;
}
inline PointPair<Complex> involution(const QuarticSurface& s, const PointPair<Complex>& pair) {
  return involution_trace(s, pair).result;
}

bool pairs_equal(const PointPair<QuadExt>& x, const PointPair<QuadExt>& y);

/// Distance of unordered pairs: min over the two matchings of the larger
/// point distance.
Real pair_distance(const PointPair<Complex>& x, const PointPair<Complex>& y);

PointPair<Complex> to_complex(const PointPair<QuadExt>& pair, long precision);

}  // namespace coq
