#include <map>

#include "coquartic/cayley/loop.hpp"
#include "coquartic/error.hpp"
#include "doctest.h"
#include "unit/oracles.hpp"

using namespace coq;

namespace {

MultiPoly x(int i) { return MultiPoly::var(i); }

Tritensor kronecker() {
  Tritensor t;
  for (int i = 0; i < 4; ++i) t(i, i, i) = 1;
  return t;
}

RationalPoint rpoint(long a, long b, long c, long d) {
  return RationalPoint({Rational(a), Rational(b), Rational(c), Rational(d)});
}

// Triangle structure of the six maps, established by certify_map and frozen.
const std::map<int, int> kExpectedTarget{{0, 2}, {1, 1}, {2, 2}, {3, 0}, {4, 1}, {5, 0}};

// Forced right-kernel pair (x, y) for T_0 and a forced left pair for T_1.
const IncidenceConstraint kRight0{rpoint(1, 2, -1, 3), rpoint(2, 0, 1, -1), 0, Side::Right};
const IncidenceConstraint kLeft1{rpoint(-2, 1, 1, 1), rpoint(1, 1, 3, 0), 1, Side::Left};

Tritensor incidence() { return incidence_tritensor(31, {kRight0, kLeft1}); }

}  // namespace

TEST_CASE("kernel polynomials") {
  Vector4<MultiPoly> y = kernel_polys(kronecker(), {0, Side::Right, 0});
  CHECK(y[0] == x(1) * x(2) * x(3));
  CHECK(y[1].is_zero());
  CHECK(y[2].is_zero());
  CHECK(y[3].is_zero());

  // T_l(x) Y(x) = det e_row (right) and Y^T T_l(x) = det e_col^T (left).
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    Tritensor t = random_tritensor(seed, 9);
    for (int l = 0; l < 3; ++l) {
      PolyMatrix4 m = contract(t, l);
      MultiPoly det = det4(m);
      for (Side side : {Side::Right, Side::Left}) {
        for (int idx = 0; idx < 4; ++idx) {
          Vector4<MultiPoly> k = kernel_polys(t, {l, side, idx});
          for (const MultiPoly& c : k) {
            CHECK(c.degree() == 3);
            CHECK(c.is_homogeneous());
          }
          Vector4<MultiPoly> prod = side == Side::Right ? multiply(m, k) : multiply(k, m);
          for (int r = 0; r < 4; ++r) CHECK(prod[r] == (r == idx ? det : MultiPoly()));
        }
      }
    }
  }

  // At a forced incidence point the right kernel is the forced partner.
  Tritensor t = incidence();
  Vector4<MultiPoly> k = kernel_polys(t, {0, Side::Right, 0});
  Vector4<Rational> at{k[0].evaluate(kRight0.x.x), k[1].evaluate(kRight0.x.x), k[2].evaluate(kRight0.x.x),
                       k[3].evaluate(kRight0.x.x)};
  REQUIRE_FALSE(RationalPoint{}.x == at);
  CHECK(projectively_equal(RationalPoint(at), kRight0.y));
}

TEST_CASE("divisibility certificates and the triangle") {
  oracle::Draw draw(50);
  for (std::uint64_t seed : {1ULL, 2ULL}) {
    Tritensor t = random_tritensor(seed, 9);
    auto certs = certify_all(t);
    for (std::size_t n = 0; n < certs.size(); ++n) {
      const MapCertificate& c = certs[n];
      CHECK(c.descriptor == all_descriptors()[n]);
      CHECK_FALSE(c.ambiguous);
      CHECK(c.divisible_targets.size() == 1);
      CHECK(c.target == kExpectedTarget.at(static_cast<int>(n)));
      CHECK(c.quotient.degree() == 8);
      CHECK(c.quotient.is_homogeneous());

      if (n == 0) {
        // det T_target(Y(p)) - q(p) det T_source(p) = 0 at 50 rational
        // points, with the determinants computed by elimination.
        Vector4<MultiPoly> y = kernel_polys(t, c.descriptor);
        for (int k = 0; k < 50; ++k) {
          Vector4<Rational> p{draw.rational(6), draw.rational(6), draw.rational(6), draw.rational(6)};
          Vector4<Rational> yp{y[0].evaluate(p), y[1].evaluate(p), y[2].evaluate(p), y[3].evaluate(p)};
          Rational image = oracle::gauss_det(contract_at(t, c.target, yp));
          Rational source = oracle::gauss_det(contract_at(t, c.descriptor.source, p));
          CHECK(image == c.quotient.evaluate(p) * source);
        }
      }
    }
  }

  auto a = certify_map(random_tritensor(3, 9), {1, Side::Left, 0});
  auto b = certify_map(random_tritensor(3, 9), {1, Side::Left, 0});
  CHECK(a.target == b.target);
  CHECK(a.quotient == b.quotient);

  MapCertificate k = certify_map(kronecker(), {0, Side::Right, 0});
  CHECK(k.ambiguous);
  CHECK(k.divisible_targets.size() == 2);
}

TEST_CASE("phi on exact incidence points") {
  Tritensor t = incidence();
  RationalPoint y = phi(t, {0, Side::Right, 0}, kRight0.x);
  CHECK(projectively_equal(y, kRight0.y));
  CHECK(quartic(t, 2).F().evaluate(y.x) == 0);
  CHECK(projectively_equal(phi(t, {2, Side::Left, 0}, y), kRight0.x));

  RationalPoint z = phi(t, {1, Side::Left, 0}, kLeft1.x);
  CHECK(projectively_equal(z, kLeft1.y));
  CHECK(quartic(t, 0).F().evaluate(z.x) == 0);
  CHECK(projectively_equal(phi(t, {0, Side::Left, 0}, z), kLeft1.x));

  // The same through the quadratic-extension coordinate field.
  CHECK(projectively_equal(phi(t, {0, Side::Right, 0}, to_quad(kRight0.x)), to_quad(kRight0.y)));

  try {
    phi(t, {0, Side::Right, 0}, rpoint(1, 0, 0, 0));
    FAIL("expected NotOnSurface");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotOnSurface);
  }
  // Kronecker T0 at (0:0:1:1) has rank 2: every cofactor vanishes.
  try {
    phi(kronecker(), {0, Side::Right, 0}, rpoint(0, 0, 1, 1));
    FAIL("expected KernelRankDeficient");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::KernelRankDeficient);
  }
  // Kronecker T0 at (0:1:1:1): column 0 of the adjugate is the only nonzero one.
  RationalPoint e0 = phi(kronecker(), {0, Side::Right, 1}, rpoint(0, 1, 1, 1));
  CHECK(projectively_equal(e0, rpoint(1, 0, 0, 0)));
}

TEST_CASE("phi on numeric points") {
  const long prec = 256;
  Tritensor t = random_tritensor(4, 9);
  auto certs = certify_all(t);
  for (const MapCertificate& c : certs) {
    QuarticSurface src = quartic(t, c.descriptor.source);
    QuarticSurface dst = quartic(t, c.target);
    for (const ComplexPoint& p : sample_points(src, 5, 2, prec).points) {
      ComplexPoint q = phi(t, c.descriptor, p);
      CHECK(surface_residual(dst.F(), q) < Real::pow2(-128, prec));
    }
  }
}

TEST_CASE("inverse pairs") {
  Tritensor t = incidence();
  auto certs = certify_all(t);
  const std::map<int, int> expected_inverse{{0, 5}, {1, 3}, {2, 4}, {3, 1}, {4, 2}, {5, 0}};
  for (const MapCertificate& c : certs) {
    std::vector<RationalPoint> exact;
    if (c.descriptor == KernelMapDescriptor{0, Side::Right, 0}) exact.push_back(kRight0.x);
    if (c.descriptor == KernelMapDescriptor{1, Side::Left, 0}) exact.push_back(kLeft1.x);
    InverseVerdict v = inverse_pair_check(t, certs, c.descriptor, 9, 256, exact);
    CHECK(v.status == InverseVerdict::Status::Found);
    REQUIRE(v.inverse.has_value());
    CHECK(descriptor_slot(*v.inverse) == expected_inverse.at(descriptor_slot(c.descriptor)));
    CHECK(v.max_distance < 1e-30);
  }

  Tritensor k = kronecker();
  std::array<MapCertificate, 6> kc;
  for (std::size_t n = 0; n < 6; ++n) kc[n] = certify_map(k, all_descriptors()[n]);
  CHECK(inverse_pair_check(k, kc, {0, Side::Right, 0}, 1, 256).status == InverseVerdict::Status::Ambiguous);
}

TEST_CASE("loop map preserves Sigma_0 and reverses") {
  const long prec = 256;
  const Real tol = Real::pow2(-100, prec);
  Tritensor t = random_tritensor(2, 9);
  auto certs = certify_all(t);
  LoopMap fwd = loop_map(certs, Orientation::Forward);
  LoopMap rev = loop_map(certs, Orientation::Reverse);
  CHECK_FALSE(fwd.ambiguous);
  CHECK(descriptor_slot(fwd.path[0]) == 1);  // (0,L) -> Sigma_1
  CHECK(descriptor_slot(fwd.path[1]) == 2);  // (1,R) -> Sigma_2
  CHECK(descriptor_slot(fwd.path[2]) == 5);  // (2,L) -> Sigma_0
  CHECK(descriptor_slot(rev.path[0]) == 0);
  CHECK(descriptor_slot(rev.path[1]) == 4);
  CHECK(descriptor_slot(rev.path[2]) == 3);

  QuarticSurface s0 = quartic(t, 0);
  for (const ComplexPoint& p : sample_points(s0, 8, 2, prec).points) {
    ComplexPoint q = fwd.apply(t, p);
    CHECK(surface_residual(s0.F(), q) < tol);
    CHECK(projective_distance(rev.apply(t, q), p) < tol);
    CHECK(projective_distance(fwd.apply(t, rev.apply(t, p)), p) < tol);
  }

  Tritensor k = kronecker();
  std::array<MapCertificate, 6> kc;
  for (std::size_t n = 0; n < 6; ++n) kc[n] = certify_map(k, all_descriptors()[n]);
  CHECK(loop_map(kc, Orientation::Forward).ambiguous);
}

TEST_CASE("orbits and fixed-point scan") {
  Tritensor t = random_tritensor(1, 9);
  auto certs = certify_all(t);
  LoopMap fwd = loop_map(certs, Orientation::Forward);
  LoopMap rev = loop_map(certs, Orientation::Reverse);
  QuarticSurface s0 = quartic(t, 0);
  PointMap psi = [&](const ComplexPoint& p) { return fwd.apply(t, p); };
  PointMap psi_rev = [&](const ComplexPoint& p) { return rev.apply(t, p); };

  const long prec = 512;
  ComplexPoint p = sample_points(s0, 2, 1, prec).points.front();
  OrbitReport zero = orbit(s0, psi, p, 0, prec, Real::pow2(-100, prec));
  CHECK(zero.points.size() == 1);
  CHECK_FALSE(zero.min_return_distance.has_value());

  OrbitReport eight = orbit(s0, psi, p, 8, prec, Real::pow2(-100, prec), psi_rev);
  CHECK(eight.points.size() == 9);
  CHECK(eight.max_residual < std::ldexp(1.0, -100));
  REQUIRE(eight.max_roundtrip.has_value());
  CHECK(*eight.max_roundtrip < std::ldexp(1.0, -100));
  REQUIRE(eight.min_return_distance.has_value());
  WARN(*eight.min_return_distance > 1e-3);  // experiment, not a theorem

  // 64 bits cannot hold a 2^-100 residual.
  ComplexPoint low = sample_points(s0, 2, 1, 64).points.front();
  try {
    orbit(s0, psi, low, 8, 64, Real::pow2(-100, 64));
    FAIL("expected PrecisionExhausted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PrecisionExhausted);
  }

  PointMap identity = [&](const ComplexPoint& q) { return psi_rev(psi(q)); };
  FixedPointReport control = fixed_point_scan(s0, identity, 20, 3, 256);
  CHECK(control.samples == 20);
  CHECK(control.min_distance < 1e-30);

  FixedPointReport scan = fixed_point_scan(s0, psi, 40, 3, 256);
  FixedPointReport again = fixed_point_scan(s0, psi, 40, 3, 256);
  CHECK(scan.samples == 40);
  CHECK(scan.min_distance > 0);
  CHECK(scan.min_distance == again.min_distance);
  CHECK(scan.argmin == again.argmin);
}
