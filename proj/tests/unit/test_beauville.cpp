#include "coquartic/beauville/conjugation.hpp"
#include "coquartic/error.hpp"
#include "doctest.h"

using namespace coq;

namespace {

MultiPoly x(int i) { return MultiPoly::var(i); }
MultiPoly pow4(int i) { return x(i) * x(i) * x(i) * x(i); }

QuarticSurface fermat() { return QuarticSurface(pow4(0) + pow4(1) + pow4(2) - pow4(3), "fermat"); }

QuadPoint qpoint(long a, long b, long c, long d) {
  return to_quad(RationalPoint({Rational(a), Rational(b), Rational(c), Rational(d)}));
}

QuadExt root7(Rational a, Rational b) { return QuadExt(a, b, -7); }

Tritensor kronecker() {
  Tritensor t;
  for (int i = 0; i < 4; ++i) t(i, i, i) = 1;
  return t;
}

}  // namespace

TEST_CASE("line through a pair") {
  PointPair<QuadExt> pair = make_point_pair(qpoint(1, 0, 0, 0), qpoint(0, 1, 0, 0));
  ParamLine<QuadExt> line = line_through(pair);
  // Canonical order puts (0:1:0:0) first: p(t) = (t : 1 - t : 0 : 0).
  CHECK(line.a == Vector4<QuadExt>{QuadExt(0), QuadExt(1), QuadExt(0), QuadExt(0)});
  CHECK(line.b == Vector4<QuadExt>{QuadExt(1), QuadExt(-1), QuadExt(0), QuadExt(0)});
  CHECK(projectively_equal(QuadPoint(line.at(QuadExt(0))), pair.first));
  CHECK(projectively_equal(QuadPoint(line.at(QuadExt(1))), pair.second));

  try {
    make_point_pair(qpoint(1, 2, 3, 4), qpoint(2, 4, 6, 8));
    FAIL("expected CoincidentPoints");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CoincidentPoints);
  }
  // Unordered: both orders give the same stored pair.
  PointPair<QuadExt> swapped = make_point_pair(qpoint(0, 1, 0, 0), qpoint(1, 0, 0, 0));
  CHECK(swapped.first.x == pair.first.x);
  CHECK(swapped.second.x == pair.second.x);
}

TEST_CASE("restriction to a line") {
  QuarticSurface f = fermat();
  ParamLine<QuadExt> line{{QuadExt(0), QuadExt(0), QuadExt(1), QuadExt(1)},
                          {QuadExt(1), QuadExt(0), QuadExt(-1), QuadExt(0)}};
  // t^4 + (1 - t)^4 - 1 expands to 2t^4 - 4t^3 + 6t^2 - 4t.
  CHECK(restrict(f, line) == UniPoly<QuadExt>({QuadExt(0), QuadExt(-4), QuadExt(6), QuadExt(-4), QuadExt(2)},
                                               QuadExt()));

  QuarticSurface cone(pow4(0), "cone");
  ParamLine<QuadExt> in_plane{{QuadExt(0), QuadExt(1), QuadExt(0), QuadExt(0)},
                              {QuadExt(0), QuadExt(-1), QuadExt(1), QuadExt(3)}};
  CHECK(restrict(cone, in_plane).is_zero());
}

TEST_CASE("exact involution on the Fermat-type quartic") {
  QuarticSurface f = fermat();
  PointPair<QuadExt> pair = make_point_pair(qpoint(0, 0, 1, 1), qpoint(1, 0, 0, 1));
  InvolutionTrace<QuadExt> tr = involution_trace(f, pair);
  CHECK(tr.restriction == UniPoly<QuadExt>({QuadExt(0), QuadExt(-4), QuadExt(6), QuadExt(-4), QuadExt(2)}, QuadExt()));
  CHECK(tr.residual == UniPoly<QuadExt>({QuadExt(4), QuadExt(-2), QuadExt(2)}, QuadExt()));
  CHECK(tr.t_plus == root7(Rational(1, 2), Rational(1, 2)));
  CHECK(tr.t_minus == root7(Rational(1, 2), Rational(-1, 2)));
  CHECK_FALSE(tr.reparametrized);

  // ((1 +- s)/2 : 0 : (1 -+ s)/2 : 1), s = sqrt(-7)
  QuadPoint plus({root7(Rational(1, 2), Rational(1, 2)), QuadExt(0), root7(Rational(1, 2), Rational(-1, 2)), QuadExt(1)});
  QuadPoint minus({root7(Rational(1, 2), Rational(-1, 2)), QuadExt(0), root7(Rational(1, 2), Rational(1, 2)), QuadExt(1)});
  CHECK(pairs_equal(tr.result, make_point_pair(plus, minus)));
  CHECK(is_zero(f.F().evaluate(tr.result.first.x)));
  CHECK(is_zero(f.F().evaluate(tr.result.second.x)));

  // Involution twice is the identity, exactly in Q(sqrt -7).
  CHECK(pairs_equal(involution(f, tr.result), pair));

  // The residual pair spans the same line: every 3x3... the 2x4 matrix of
  // (a, b) with each residual point has rank 2, i.e. all 3x3 minors vanish.
  for (const QuadPoint& p : {tr.result.first, tr.result.second}) {
    std::array<Vector4<QuadExt>, 3> rows{pair.first.x, pair.second.x, p.x};
    for (int skip = 0; skip < 4; ++skip) {
      std::array<int, 3> c{};
      for (int k = 0, n = 0; k < 4; ++k)
        if (k != skip) c[n++] = k;
      QuadExt minor = rows[0][c[0]] * (rows[1][c[1]] * rows[2][c[2]] - rows[1][c[2]] * rows[2][c[1]]) -
                      rows[0][c[1]] * (rows[1][c[0]] * rows[2][c[2]] - rows[1][c[2]] * rows[2][c[0]]) +
                      rows[0][c[2]] * (rows[1][c[0]] * rows[2][c[1]] - rows[1][c[1]] * rows[2][c[0]]);
      CHECK(is_zero(minor));
    }
  }
  // Symmetric functions of the residual parameters are rational.
  CHECK((tr.t_plus + tr.t_minus).is_rational());
  CHECK((tr.t_plus * tr.t_minus).is_rational());

  // Exact and numeric paths agree on the embedded rational pair.
  PointPair<Complex> numeric = involution(f, to_complex(pair, 256));
  CHECK(pair_distance(numeric, to_complex(tr.result, 256)) < Real::pow2(-200, 256));
}

TEST_CASE("involution error cases") {
  // The line x1 = x0, x3 = x2 lies on x0^4 - x1^4 + x2^4 - x3^4.
  QuarticSurface s(pow4(0) - pow4(1) + pow4(2) - pow4(3), "lines");
  try {
    involution(s, make_point_pair(qpoint(1, 1, 0, 0), qpoint(0, 0, 1, 1)));
    FAIL("expected LineOnSurface");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LineOnSurface);
  }
  try {
    involution(fermat(), make_point_pair(qpoint(1, 0, 0, 0), qpoint(0, 0, 1, 1)));
    FAIL("expected NotOnSurface");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotOnSurface);
  }
  // On x0^3 x1 - x2^3 x3 + x1^4 - x3^4 the direction p2 - p1 = (0,1,0,1) is a
  // zero of F, so the first parametrization drops degree.
  QuarticSurface c(x(0) * x(0) * x(0) * x(1) - x(2) * x(2) * x(2) * x(3) + pow4(1) - pow4(3), "drop");
  PointPair<QuadExt> pair = make_point_pair(qpoint(1, -1, -1, 0), qpoint(1, 0, -1, 1));
  InvolutionTrace<QuadExt> tr = involution_trace(c, pair);
  CHECK(tr.reparametrized);
  CHECK(tr.restriction.degree() == 4);
  CHECK(is_zero(c.F().evaluate(tr.result.first.x)));
  CHECK(is_zero(c.F().evaluate(tr.result.second.x)));
  CHECK(pairs_equal(involution(c, tr.result), pair));
}

TEST_CASE("numeric involution on sampled pairs") {
  const long prec = 256;
  Tritensor t = random_tritensor(3, 9);
  QuarticSurface s0 = quartic(t, 0);
  for (const PointPair<Complex>& pair : sample_pairs(s0, 1, 10, prec)) {
    PointPair<Complex> once = involution(s0, pair);
    CHECK(surface_residual(s0.F(), once.first) < surface_tolerance(prec));
    CHECK(surface_residual(s0.F(), once.second) < surface_tolerance(prec));
    CHECK(pair_distance(involution(s0, once), pair) < Real::pow2(-100, prec));
  }
}

TEST_CASE("conjugated involutions") {
  const long prec = 256;
  Triangle tri = Triangle::build(random_tritensor(2, 9));
  CHECK_FALSE(tri.ambiguous);
  std::vector<PointPair<Complex>> pairs = sample_pairs(tri.surface(0), 4, 3, prec);
  REQUIRE(pairs.size() == 3);
  for (const PointPair<Complex>& pair : pairs) {
    // l = 0 is the plain involution.
    CHECK(pair_distance(conjugated_involution(tri, Frame::forward(), 0, pair), involution(tri.surface(0), pair)) <
          Real::pow2(-200, prec));
    for (const Frame& frame : all_frames()) {
      for (int l = 1; l < 3; ++l) {
        PointPair<Complex> once = conjugated_involution(tri, frame, l, pair);
        CHECK(surface_residual(tri.surface(0).F(), once.first) < surface_tolerance(prec));
        CHECK(pair_distance(conjugated_involution(tri, frame, l, once), pair) < Real::pow2(-100, prec));
      }
    }
  }
  PointPair<Complex> a = conjugated_involution(tri, Frame::reverse(), 1, pairs[0]);
  PointPair<Complex> b = conjugated_involution(tri, Frame::reverse(), 1, pairs[0]);
  CHECK(a.first.x == b.first.x);
  CHECK(a.second.x == b.second.x);
}

TEST_CASE("prop-og experiment") {
  Triangle tri = Triangle::build(random_tritensor(1, 9));
  OgReport rep = prop_og_experiment(tri, {1, 2}, 256, 2);
  CHECK_FALSE(rep.refused);
  CHECK(rep.candidates.size() == 48);
  CHECK(rep.control_mismatch < 1e-40);
  CHECK(rep.match_count >= 1);
  // Within one psi orientation and frame at most one order can match.
  for (std::size_t n = 0; n < rep.candidates.size(); n += 6) {
    int in_block = 0;
    for (std::size_t k = n; k < n + 6; ++k) in_block += rep.candidates[k].match ? 1 : 0;
    CHECK(in_block <= 1);
  }
  // Forward-chain frame: psi_rev = iota2 o iota1 o iota0, psi = its inverse.
  REQUIRE(rep.frames.size() == 4);
  const OgFrameSummary& fwd = rep.frames[0];
  CHECK(fwd.frame == Frame::forward());
  CHECK(fwd.consistent);
  bool expected_order = false;
  for (std::size_t n : fwd.matches) {
    const OgCandidate& c = rep.candidates[n];
    expected_order = expected_order || (c.psi == Orientation::Reverse && c.order == std::array<int, 3>{0, 1, 2});
  }
  CHECK(expected_order);
  const OgCandidate& best = rep.candidates[rep.best];
  CHECK(best.match);
  CHECK(best.max_mismatch < 1e-60);

  Triangle k = Triangle::build(kronecker());
  OgReport refused = prop_og_experiment(k, {1}, 256);
  CHECK(refused.refused);
}
