#include <algorithm>
#include <cmath>

#include "coquartic/error.hpp"
#include "coquartic/exactalg/matrix4.hpp"
#include "coquartic/exactalg/multipoly.hpp"
#include "coquartic/exactalg/quadext.hpp"
#include "coquartic/exactalg/roots.hpp"
#include "doctest.h"
#include "unit/oracles.hpp"

using namespace coq;

namespace {

MultiPoly x(int i) { return MultiPoly::var(i); }

PolyMatrix4 diag_vars() {
  PolyMatrix4 m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m[i][j] = i == j ? x(i) : MultiPoly();
  return m;
}

// Random 4x4 matrix of linear forms with integer coefficients.
PolyMatrix4 random_linear(oracle::Draw& draw) {
  PolyMatrix4 m;
  for (auto& row : m)
    for (auto& e : row) {
      MultiPoly p;
      for (int v = 0; v < 4; ++v) p += x(v).scaled(Rational(draw.integer(-9, 9)));
      e = p;
    }
  return m;
}

Vector4<Rational> random_point(oracle::Draw& draw) {
  return {draw.rational(7), draw.rational(7), draw.rational(7), draw.rational(7)};
}

UniPoly<Complex> complex_poly(std::vector<long> coeffs, long prec) {
  std::vector<Complex> c;
  for (long v : coeffs) c.emplace_back(Rational(v), prec);
  return UniPoly<Complex>(c, Complex(prec));
}

bool has_root_near(const std::vector<Complex>& roots, double re, double im, double tol) {
  return std::any_of(roots.begin(), roots.end(), [&](const Complex& r) {
    return std::abs(r.re().to_double() - re) < tol && std::abs(r.im().to_double() - im) < tol;
  });
}

}  // namespace

TEST_CASE("rational parsing and exact arithmetic") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(format_rational(Rational(-3, 2)) == "-3/2");
  CHECK(format_rational(Rational(5)) == "5/1");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);

  // Cross-multiplication oracle: a/b + c/d = (ad + bc) / bd.
  oracle::Draw draw(11);
  for (int n = 0; n < 200; ++n) {
    long a = draw.integer(-50, 50), b = draw.integer(1, 50), c = draw.integer(-50, 50), d = draw.integer(1, 50);
    Rational sum = make_rational(a, b) + make_rational(c, d);
    Rational expected = make_rational(a * d + b * c, b * d);
    CHECK(sum == expected);
    CHECK(sum.get_den() > 0);
    CHECK(gcd(sum.get_num(), sum.get_den()) == 1);
  }
}

TEST_CASE("square-free part and rational square roots") {
  CHECK(squarefree_part(Integer(-28)) == -7);
  CHECK(squarefree_part(Integer(72)) == 2);
  CHECK(squarefree_part(Integer(1)) == 1);
  Rational r;
  CHECK(rational_sqrt(Rational(9, 4), r));
  CHECK(r == Rational(3, 2));
  CHECK_FALSE(rational_sqrt(Rational(2), r));
}

TEST_CASE("quadratic extension arithmetic") {
  QuadExt s(0, 1, -7);  // sqrt(-7)
  CHECK(s * s == QuadExt(-7));
  QuadExt z(Rational(1, 2), Rational(3, 5), -7);
  CHECK(z.conjugate().conjugate() == z);
  CHECK(z * z.conjugate() == QuadExt(z.norm()));
  CHECK((z / z) == QuadExt(1));
  CHECK_THROWS_AS(QuadExt(0, 1, 5) + QuadExt(0, 1, -7), Error);

  QuadExt root;
  CHECK(sqrt_in_field(QuadExt(-7, 0, -7), root));
  CHECK(root * root == QuadExt(-7));
  // (1 + sqrt 5)^2 = 6 + 2 sqrt 5
  CHECK(sqrt_in_field(QuadExt(6, 2, 5), root));
  CHECK(root * root == QuadExt(6, 2, 5));
  CHECK_FALSE(sqrt_in_field(QuadExt(0, 1, 5), root));
}

TEST_CASE("multivariate polynomial basics and text format") {
  MultiPoly p = x(0) * x(0) * x(1) - x(2).scaled(Rational(3, 2)) + MultiPoly(4);
  CHECK(p.degree() == 3);
  CHECK_FALSE(p.is_homogeneous());
  CHECK(p.leading().mono == Monomial(2, 1, 0, 0));
  CHECK(format_poly(p) == "1/1 x0^2 x1^1 x2^0 x3^0 + -3/2 x0^0 x1^0 x2^1 x3^0 + 4/1 x0^0 x1^0 x2^0 x3^0");
  CHECK(parse_poly(format_poly(p)) == p);
  CHECK(parse_poly("0").is_zero());
  CHECK(format_poly(MultiPoly()) == "0");
  CHECK_THROWS_AS(parse_poly("1/1 x7^2"), Error);
  CHECK((p - p).is_zero());

  // Graded-lex: higher degree first, then x0 > x1 > x2 > x3.
  CHECK(Monomial(0, 0, 0, 2) > Monomial(1, 0, 0, 0));
  CHECK(Monomial(1, 0, 0, 0) > Monomial(0, 1, 0, 0));
  CHECK(Monomial(0, 2, 0, 0) > Monomial(0, 1, 1, 0));

  CHECK(p.derivative(0) == (x(0) * x(1)).scaled(2));
}

TEST_CASE("text format round trip on random polynomials") {
  oracle::Draw draw(5);
  for (int n = 0; n < 30; ++n) {
    std::vector<Term> terms;
    for (int k = 0; k < 12; ++k)
      terms.push_back({Monomial(static_cast<int>(draw.integer(0, 5)), static_cast<int>(draw.integer(0, 5)),
                                static_cast<int>(draw.integer(0, 5)), static_cast<int>(draw.integer(0, 5))),
                       draw.rational(20)});
    MultiPoly p = MultiPoly::from_terms(terms);
    CHECK(parse_poly(format_poly(p)) == p);
  }
}

TEST_CASE("det4 examples") {
  CHECK(det4(diag_vars()) == x(0) * x(1) * x(2) * x(3));

  oracle::Draw draw(2);
  PolyMatrix4 m = random_linear(draw);
  m[2] = m[0];
  CHECK(det4(m).is_zero());

  // Evaluation oracle: det4 at 20 rational points equals the elimination
  // determinant of the evaluated matrix.
  for (int trial = 0; trial < 3; ++trial) {
    PolyMatrix4 t = random_linear(draw);
    MultiPoly d = det4(t);
    CHECK(d.degree() == 4);
    CHECK(d.is_homogeneous());
    for (int k = 0; k < 20; ++k) {
      Vector4<Rational> p = random_point(draw);
      Matrix4<Rational> at = evaluate(t, p);
      CHECK(d.evaluate(p) == oracle::gauss_det(at));
    }
  }
}

TEST_CASE("adjugate4 examples and identity") {
  PolyMatrix4 adj = adjugate4(diag_vars());
  CHECK(adj[0][0] == x(1) * x(2) * x(3));
  CHECK(adj[1][1] == x(0) * x(2) * x(3));
  CHECK(adj[2][2] == x(0) * x(1) * x(3));
  CHECK(adj[3][3] == x(0) * x(1) * x(2));
  CHECK(adj[0][1].is_zero());

  PolyMatrix4 id;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) id[i][j] = MultiPoly(i == j ? 1 : 0);
  CHECK(adjugate4(id) == id);

  // Property: M adj(M) = adj(M) M = det(M) I over random linear matrices.
  oracle::Draw draw(3);
  for (int trial = 0; trial < 8; ++trial) {
    PolyMatrix4 m = random_linear(draw);
    PolyMatrix4 a = adjugate4(m);
    MultiPoly d = det4(m);
    PolyMatrix4 left = multiply(m, a);
    PolyMatrix4 right = multiply(a, m);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        MultiPoly expected = i == j ? d : MultiPoly();
        CHECK(left[i][j] == expected);
        CHECK(right[i][j] == expected);
      }
    }
  }
}

TEST_CASE("mv_divide examples") {
  auto [q1, r1] = mv_divide(x(0) * x(0) * x(1), x(0));
  CHECK(q1 == x(0) * x(1));
  CHECK(r1.is_zero());

  auto [q2, r2] = mv_divide(x(0) * x(0) + x(1), x(0));
  CHECK(q2 == x(0));
  CHECK(r2 == x(1));

  CHECK_THROWS_AS(mv_divide(x(0), MultiPoly()), Error);
  try {
    mv_divide(x(0), MultiPoly());
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DivisionByZeroPolynomial);
  }
}

TEST_CASE("mv_divide round trip and exact divisibility") {
  oracle::Draw draw(7);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Term> ft;
    std::vector<Term> gt;
    for (int k = 0; k < 10; ++k)
      ft.push_back({Monomial(static_cast<int>(draw.integer(0, 4)), static_cast<int>(draw.integer(0, 4)),
                             static_cast<int>(draw.integer(0, 4)), static_cast<int>(draw.integer(0, 4))),
                    draw.rational(9)});
    for (int k = 0; k < 4; ++k)
      gt.push_back({Monomial(static_cast<int>(draw.integer(0, 2)), static_cast<int>(draw.integer(0, 2)),
                             static_cast<int>(draw.integer(0, 2)), static_cast<int>(draw.integer(0, 2))),
                    draw.rational(9)});
    MultiPoly f = MultiPoly::from_terms(ft);
    MultiPoly g = MultiPoly::from_terms(gt);
    if (g.is_zero()) continue;
    auto [q, r] = mv_divide(f, g);
    CHECK(q * g + r == f);
    for (const Term& t : r.terms()) CHECK_FALSE(g.leading().mono.divides(t.mono));

    // A genuine product always divides with zero remainder.
    auto [q2, r2] = mv_divide(f * g, g);
    CHECK(r2.is_zero());
    CHECK(q2 == f);
  }
}

TEST_CASE("roots_hp examples") {
  const long prec = 256;
  auto r1 = roots_hp(complex_poly({-1, 0, 0, 0, 1}, prec), {prec});
  REQUIRE(r1.size() == 4);
  CHECK(has_root_near(r1, 1, 0, 1e-30));
  CHECK(has_root_near(r1, -1, 0, 1e-30));
  CHECK(has_root_near(r1, 0, 1, 1e-30));
  CHECK(has_root_near(r1, 0, -1, 1e-30));

  // t(t-1)(t^2-t+2) = t^4 - 2t^3 + 3t^2 - 2t; quadratic formula gives (1 +- sqrt(-7))/2.
  const double im = std::sqrt(7.0) / 2;
  for (auto coeffs : {std::vector<long>{0, -2, 3, -2, 1}, std::vector<long>{0, -4, 6, -4, 2}}) {
    auto r = roots_hp(complex_poly(coeffs, prec), {prec});
    REQUIRE(r.size() == 4);
    CHECK(has_root_near(r, 0, 0, 1e-30));
    CHECK(has_root_near(r, 1, 0, 1e-30));
    CHECK(has_root_near(r, 0.5, im, 1e-14));
    CHECK(has_root_near(r, 0.5, -im, 1e-14));
  }

  CHECK_THROWS_AS(roots_hp(complex_poly({3}, prec), {prec}), Error);
}

TEST_CASE("roots_hp residual bound and root count") {
  oracle::Draw draw(13);
  for (long prec : {64L, 128L, 256L, 512L}) {
    for (int trial = 0; trial < 6; ++trial) {
      int deg = static_cast<int>(draw.integer(1, 8));
      std::vector<long> coeffs;
      for (int i = 0; i <= deg; ++i) coeffs.push_back(draw.integer(-20, 20));
      if (coeffs.back() == 0) coeffs.back() = 1;
      UniPoly<Complex> p = complex_poly(coeffs, prec);
      auto roots = roots_hp(p, {prec});
      CHECK(static_cast<int>(roots.size()) == deg);
      for (const Complex& r : roots) {
        CHECK(r.precision() >= prec);
        CHECK(p(r).abs() <= residual_tolerance(prec) * evaluation_scale(p, r));
      }
    }
  }
  // repeated root
  auto doubled = roots_hp(complex_poly({1, -2, 1}, 256), {256});
  CHECK(has_root_near(doubled, 1, 0, 1e-30));
}

TEST_CASE("quad_solve examples") {
  auto r = quad_solve(UniPoly<Rational>({Rational(2), Rational(-1), Rational(1)}, Rational(0)));
  CHECK(r.d == -7);
  CHECK(r.plus == QuadExt(Rational(1, 2), Rational(1, 2), -7));
  CHECK(r.minus == QuadExt(Rational(1, 2), Rational(-1, 2), -7));

  auto dbl = quad_solve(UniPoly<Rational>({Rational(1), Rational(-2), Rational(1)}, Rational(0)));
  CHECK(dbl.plus == QuadExt(1));
  CHECK(dbl.minus == QuadExt(1));

  auto five = quad_solve(UniPoly<Rational>({Rational(-5), Rational(0), Rational(1)}, Rational(0)));
  CHECK(five.d == 5);
  CHECK(five.plus == QuadExt(0, 1, 5));
  CHECK(five.minus == QuadExt(0, -1, 5));

  CHECK_THROWS_AS(quad_solve(UniPoly<Rational>({Rational(1), Rational(1)}, Rational(0))), Error);
}

TEST_CASE("quad_solve roots substitute back to zero") {
  oracle::Draw draw(17);
  for (int trial = 0; trial < 50; ++trial) {
    Rational a = draw.rational(12);
    if (sgn(a) == 0) a = 1;
    UniPoly<Rational> q({draw.rational(12), draw.rational(12), a}, Rational(0));
    auto r = quad_solve(q);
    UniPoly<QuadExt> lifted({QuadExt(q.coeffs()[0]), QuadExt(q.coeffs()[1]), QuadExt(q.coeffs()[2])}, QuadExt());
    CHECK(is_zero(lifted(r.plus)));
    CHECK(is_zero(lifted(r.minus)));
    // Vieta
    CHECK(r.plus + r.minus == QuadExt(-q.coeffs()[1] / a));
    CHECK(r.plus * r.minus == QuadExt(q.coeffs()[0] / a));
  }
}

TEST_CASE("high precision reals keep the wider precision") {
  Real a(Rational(1, 3), 128);
  Real b(Rational(1, 7), 512);
  CHECK((a + b).precision() == 512);
  CHECK((b * a).precision() == 512);
  Complex z(Real(3L, 256), Real(4L, 256));
  CHECK(z.abs() == Real(5L, 256));
  Complex s = sqrt(Complex(Real(-4L, 256), Real(0L, 256)));
  CHECK(s.re().is_zero());
  CHECK(s.im() == Real(2L, 256));
}
