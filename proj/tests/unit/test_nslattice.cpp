#include <cmath>
#include <random>

#include "coquartic/error.hpp"
#include "coquartic/nslattice/lattice.hpp"
#include "doctest.h"

using namespace coq;

namespace {

IntMatrix2 mat(long a, long b, long c, long d) {
  IntMatrix2 m;
  m.e[0][0] = a;
  m.e[0][1] = b;
  m.e[1][0] = c;
  m.e[1][1] = d;
  return m;
}

const LatticeElement kOne{1, 0};
const LatticeElement kTheta{0, 1};

// Fibonacci numbers by plain iteration, F(-1) = 1, F(0) = 0.
Integer fib(long k) {
  if (k == -1) return 1;
  Integer prev = 1, cur = 0;
  for (long i = 0; i < k; ++i) {
    Integer next = prev + cur;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace

TEST_CASE("pairing examples") {
  const LatticeContext co = LatticeContext::cayley_oguiso();
  CHECK(co.gram() == mat(4, 2, 2, -4));
  CHECK(pair(kOne, kOne, co) == 4);
  CHECK(pair(kOne, kTheta, co) == 2);
  CHECK(pair(kTheta, kTheta, co) == -4);

  CHECK(pair({1, 2}, {1, 2}, LatticeContext(2, 2)) == 4);
  CHECK(pair({1, 3}, {1, 3}, LatticeContext(2, 3)) == 4);
  CHECK(pair({2, 7}, {2, 7}, LatticeContext(2, 3)) == -12);

  CHECK_THROWS_AS(LatticeContext(1, 1), Error);
  CHECK_THROWS_AS(LatticeContext(2, 0), Error);
}

TEST_CASE("pairing matches the closed form on a box") {
  for (long a = 1; a <= 3; ++a) {
    const LatticeContext ctx(2, a);
    for (long x = -50; x <= 50; ++x)
      for (long y = -50; y <= 50; ++y) {
        const Integer expected = 4 * (x * x + a * x * y - y * y);
        REQUIRE(pair({x, y}, {x, y}, ctx) == expected);
        REQUIRE(ample_square(ctx, x, y).square == expected);
      }
  }
}

TEST_CASE("multiplication matrices") {
  const LatticeContext co = LatticeContext::cayley_oguiso();
  CHECK(mult_matrix(co, kTheta) == mat(0, 1, 1, 1));
  CHECK(mult_matrix(co, kOne) == IntMatrix2::identity());
  CHECK(mult_matrix(LatticeContext(3, 5), kTheta) == mat(0, 1, 1, 5));

  LatticeElement eta6 = kOne;
  for (int i = 0; i < 6; ++i) eta6 = multiply(eta6, kTheta, co);
  CHECK(eta6 == LatticeElement{5, 8});
  CHECK(mult_matrix(co, eta6) == mat(5, 8, 8, 13));
  CHECK(power(mult_matrix(co, kTheta), 6) == mat(5, 8, 8, 13));

  // Ring homomorphism on random elements.
  std::mt19937_64 gen(7);
  std::uniform_int_distribution<long> dist(-1000, 1000);
  for (int trial = 0; trial < 200; ++trial) {
    const LatticeContext ctx(2 + trial % 3, 1 + trial % 7);
    LatticeElement u{dist(gen), dist(gen)}, v{dist(gen), dist(gen)};
    CHECK(mult_matrix(ctx, multiply(u, v, ctx)) == mult_matrix(ctx, u) * mult_matrix(ctx, v));
    CHECK(apply(mult_matrix(ctx, u), v) == multiply(u, v, ctx));
  }
}

TEST_CASE("isometries") {
  CHECK(is_isometry(IntMatrix2::identity(), LatticeContext::cayley_oguiso()) == IsometryKind::Isometry);
  CHECK(is_isometry(mat(1, 1, 0, 1), LatticeContext::cayley_oguiso()) == IsometryKind::Neither);
  for (long a = 1; a <= 20; ++a)
    for (long m = 2; m <= 4; ++m) {
      const LatticeContext ctx(m, a);
      const LatticeEndo t = mult_matrix(ctx, kTheta);
      CHECK(is_isometry(t, ctx) == IsometryKind::AntiIsometry);
      CHECK(is_isometry(t * t, ctx) == IsometryKind::Isometry);
    }
}

TEST_CASE("D_n divisors") {
  const LatticeContext co = LatticeContext::cayley_oguiso();
  CHECK(dn_divisor(0, co) == LatticeElement{1, 0});
  CHECK(dn_divisor(1, co) == LatticeElement{1, 1});
  CHECK(dn_divisor(2, co) == LatticeElement{2, 3});
  for (long n = 0; n <= 10; ++n) CHECK(dn_divisor(n, co) == LatticeElement{fib(2 * n - 1), fib(2 * n)});
  for (long n = -10; n <= 10; ++n) {
    CHECK(pair(dn_divisor(n, co), dn_divisor(n, co), co) == 4);
    // D_n D_-n = 1
    CHECK(multiply(dn_divisor(n, co), dn_divisor(-n, co), co) == kOne);
  }
  CHECK_THROWS_AS(power(mat(2, 0, 0, 1), -1), Error);
}

TEST_CASE("entropy") {
  const LatticeContext co = LatticeContext::cayley_oguiso();
  const EntropyReport id = entropy(IntMatrix2::identity());
  CHECK(id.entropy.is_zero());

  const EntropyReport g = entropy(mat(5, 8, 8, 13));
  CHECK(g.trace == 18);
  CHECK(g.det == 1);
  CHECK(g.discriminant == 320);  // (18^2 - 4) = (8 sqrt 5)^2
  CHECK(g.small_eigenvalue);
  CHECK(std::abs(g.entropy.to_double() - std::log(9 + 4 * std::sqrt(5.0))) < 1e-12);
  CHECK(std::abs(g.entropy.to_double() - 2.8872709503576206) < 1e-12);

  const EntropyReport t = entropy(mult_matrix(co, kTheta));
  CHECK(std::abs(t.spectral_radius.to_double() - (1 + std::sqrt(5.0)) / 2) < 1e-15);
  CHECK(std::abs(6 * t.entropy.to_double() - g.entropy.to_double()) < 1e-12);

  // Power law and Vieta on assorted unimodular matrices.
  for (const IntMatrix2& m : {mat(2, 1, 1, 1), mat(3, 2, 1, 1), mat(0, 1, 1, 3), mat(1, 1, 0, 1), mat(0, -1, 1, 0)}) {
    const EntropyReport base = entropy(m);
    for (long k = 1; k <= 6; ++k) CHECK(std::abs(entropy(power(m, k)).entropy.to_double() - k * base.entropy.to_double()) < 1e-12);
    const long prec = 256;
    if (sgn(base.discriminant) >= 0) {
      const Real s = sqrt(Real(Rational(base.discriminant), prec));
      const Real t2(Rational(base.trace), prec);
      const Real half(Rational(1, 2), prec);
      const Real l1 = (t2 + s) * half, l2 = (t2 - s) * half;
      CHECK(abs(l1 * l2 - Real(Rational(base.det), prec)) < Real::pow2(-200, prec));
      CHECK(abs(l1 + l2 - t2) < Real::pow2(-200, prec));
    }
  }
  // Rotation by a quarter turn: complex eigenvalues on the unit circle.
  CHECK(entropy(mat(0, -1, 1, 0)).entropy.is_zero());
}

TEST_CASE("Lee classification") {
  CHECK(lee_classify(2, 1) == LeeClass::AntiSymplecticGenerator);
  CHECK(lee_classify(2, 2) == LeeClass::SymplecticGenerator);
  CHECK(lee_classify(2, 3) == LeeClass::AntiSymplecticGenerator);
  CHECK(lee_classify(3, 1) == LeeClass::Neither);
  CHECK(lee_classify(5, 2) == LeeClass::AntiSymplecticGenerator);
  CHECK_THROWS_AS(lee_classify(1, 1), Error);
  for (long m = 2; m <= 30; ++m)
    for (long a = 1; a <= 30; ++a) {
      const LeeClass c = lee_classify(m, a);
      // m | a and m | a^2 + 1 force m | 1.
      CHECK(c != LeeClass::Both);
      CHECK((c == LeeClass::SymplecticGenerator) == (a % m == 0));
      CHECK((c == LeeClass::AntiSymplecticGenerator) == ((a * a + 1) % m == 0));
    }
}

TEST_CASE("ample squares") {
  AmpleSquare h2 = ample_square(LatticeContext(2, 2), 1, 2);
  CHECK(h2.square == 4);
  CHECK(h2.square_positive);
  CHECK(ample_square(LatticeContext(2, 3), 1, 3).square == 4);
  AmpleSquare t = ample_square(LatticeContext::cayley_oguiso(), 0, 1);
  CHECK(t.square == -4);
  CHECK_FALSE(t.square_positive);
  CHECK_FALSE(t.x_positive);
  CHECK(t.y_positive);
}

TEST_CASE("Riemann-Roch checks") {
  const RrCase c2 = rr_case(2);
  const RiemannRoch r2 = rr_h0(LatticeContext(2, 2), c2.gamma, c2.h);
  CHECK(r2.h_sq == 4);
  CHECK(r2.gamma_h == 8);
  CHECK(r2.gamma_sq == 8);
  CHECK(r2.degree_check == -24);
  CHECK(r2.h0 == 28);
  CHECK(r2.bound_ok);
  CHECK_FALSE(r2.genus_warning);

  const RrCase c3 = rr_case(3);
  const RiemannRoch r3 = rr_h0(LatticeContext(2, 3), c3.gamma, c3.h);
  CHECK(r3.h_sq == 4);
  CHECK(r3.gamma_h == 2);
  CHECK(r3.gamma_sq == -12);
  CHECK(r3.degree_check == -20);
  CHECK(r3.h0 == 14);
  CHECK(r3.bound_ok);
  CHECK(r3.genus_warning);

  try {
    rr_h0(LatticeContext(2, 2), {1, 1}, {1, 1});
    FAIL("expected PreconditionFailed");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PreconditionFailed);
  }
  // Gamma = H: 4 - 16 < 0 is fine; Gamma = -H: 4 + 16 >= 0 is not.
  CHECK_NOTHROW(rr_h0(LatticeContext(2, 2), {1, 2}, {1, 2}));
  CHECK_THROWS_AS(rr_h0(LatticeContext(2, 2), {-1, -2}, {1, 2}), Error);
  CHECK_THROWS_AS(rr_case(4), Error);
}
