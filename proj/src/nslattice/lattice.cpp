#include "coquartic/nslattice/lattice.hpp"

#include <stdexcept>

#include "coquartic/error.hpp"

namespace coq {

IntMatrix2 IntMatrix2::identity() {
  IntMatrix2 m;
  m.e[0][0] = 1;
  m.e[1][1] = 1;
  return m;
}

IntMatrix2 IntMatrix2::transpose() const {
  IntMatrix2 t;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) t.e[i][j] = e[j][i];
  return t;
}

IntMatrix2 IntMatrix2::operator-() const {
  IntMatrix2 n;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) n.e[i][j] = -e[i][j];
  return n;
}

IntMatrix2 operator*(const IntMatrix2& p, const IntMatrix2& q) {
  IntMatrix2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.e[i][j] = p.e[i][0] * q.e[0][j] + p.e[i][1] * q.e[1][j];
  return r;
}

IntMatrix2 power(const IntMatrix2& m, long k) {
  IntMatrix2 base = m;
  if (k < 0) {
    const Integer d = m.det();
    if (abs(d) != 1) throw Error(ErrorCode::PreconditionFailed, "negative power of a non-unimodular matrix");
    // adj(m) / det(m) with det = +-1
    base.e[0][0] = d * m.e[1][1];
    base.e[1][1] = d * m.e[0][0];
    base.e[0][1] = -d * m.e[0][1];
    base.e[1][0] = -d * m.e[1][0];
    k = -k;
  }
  IntMatrix2 out = IntMatrix2::identity();
  while (k > 0) {
    if (k & 1) out = out * base;
    base = base * base;
    k >>= 1;
  }
  return out;
}

LatticeContext::LatticeContext(long m_, long a_) : m(m_), a(a_) {
  if (m_ < 2 || a_ < 1)
    throw Error(ErrorCode::PreconditionFailed,
                "lattice needs m >= 2 and a >= 1, got m=" + std::to_string(m_) + " a=" + std::to_string(a_));
}

IntMatrix2 LatticeContext::gram() const {
  IntMatrix2 g;
  g.e[0][0] = 2 * m;
  g.e[0][1] = m * a;
  g.e[1][0] = m * a;
  g.e[1][1] = -2 * m;
  return g;
}

std::string to_string(const LatticeElement& u) { return "(" + u.x.get_str() + "," + u.y.get_str() + ")"; }

Integer pair(const LatticeElement& u, const LatticeElement& v, const LatticeContext& ctx) {
  const IntMatrix2 g = ctx.gram();
  return u.x * (g.e[0][0] * v.x + g.e[0][1] * v.y) + u.y * (g.e[1][0] * v.x + g.e[1][1] * v.y);
}

LatticeElement multiply(const LatticeElement& u, const LatticeElement& v, const LatticeContext& ctx) {
  return {u.x * v.x + u.y * v.y, u.x * v.y + v.x * u.y + ctx.a * u.y * v.y};
}

LatticeEndo mult_matrix(const LatticeContext& ctx, const LatticeElement& u) {
  const LatticeElement c0 = multiply(u, {1, 0}, ctx);
  const LatticeElement c1 = multiply(u, {0, 1}, ctx);
  LatticeEndo m;
  m.e[0][0] = c0.x;
  m.e[1][0] = c0.y;
  m.e[0][1] = c1.x;
  m.e[1][1] = c1.y;
  return m;
}

LatticeElement apply(const LatticeEndo& m, const LatticeElement& u) {
  return {m.e[0][0] * u.x + m.e[0][1] * u.y, m.e[1][0] * u.x + m.e[1][1] * u.y};
}

std::string to_string(IsometryKind k) {
  switch (k) {
    case IsometryKind::Isometry: return "isometry";
    case IsometryKind::AntiIsometry: return "anti-isometry";
    case IsometryKind::Neither: return "neither";
  }
  return "neither";
}

IsometryKind is_isometry(const LatticeEndo& m, const LatticeContext& ctx) {
  const IntMatrix2 g = ctx.gram();
  const IntMatrix2 pulled = m.transpose() * g * m;
  if (pulled == g) return IsometryKind::Isometry;
  if (pulled == -g) return IsometryKind::AntiIsometry;
  return IsometryKind::Neither;
}

LatticeElement dn_divisor(long n, const LatticeContext& ctx) {
  const LatticeElement theta_sq = multiply({0, 1}, {0, 1}, ctx);
  return apply(power(mult_matrix(ctx, theta_sq), n), {1, 0});
}

EntropyReport entropy(const LatticeEndo& m, long precision) {
  EntropyReport r;
  r.trace = m.trace();
  r.det = m.det();
  r.discriminant = r.trace * r.trace - 4 * r.det;
  const Real t(Rational(r.trace), precision);
  if (sgn(r.discriminant) >= 0) {
    const Real s = sqrt(Real(Rational(r.discriminant), precision));
    const Real half(Rational(1, 2), precision);
    const Real l1 = abs((t + s) * half);
    const Real l2 = abs((t - s) * half);
    r.spectral_radius = Real::max(l1, l2);
    const Real one(1L, precision);
    r.small_eigenvalue = l1 <= one || l2 <= one;
  } else {
    // complex pair with |l|^2 = det
    r.spectral_radius = sqrt(Real(Rational(r.det), precision));
    r.small_eigenvalue = r.det <= 1;
  }
  r.entropy = r.spectral_radius > Real(1L, precision) ? log(r.spectral_radius) : Real(0L, precision);
  return r;
}

std::string to_string(LeeClass c) {
  switch (c) {
    case LeeClass::SymplecticGenerator: return "symplectic";
    case LeeClass::AntiSymplecticGenerator: return "anti-symplectic";
    case LeeClass::Both: return "both";
    case LeeClass::Neither: return "neither";
  }
  return "neither";
}

LeeClass lee_classify(long m, long a) {
  if (m < 2 || a < 1)
    throw Error(ErrorCode::PreconditionFailed,
                "classification needs m >= 2 and a >= 1, got m=" + std::to_string(m) + " a=" + std::to_string(a));
  const Integer mm(m);
  const Integer aa(a);
  const bool symplectic = aa % mm == 0;
  const bool anti = (aa * aa + 1) % mm == 0;
  if (symplectic && anti) return LeeClass::Both;
  if (symplectic) return LeeClass::SymplecticGenerator;
  if (anti) return LeeClass::AntiSymplecticGenerator;
  return LeeClass::Neither;
}

AmpleSquare ample_square(const LatticeContext& ctx, const Integer& x, const Integer& y) {
  AmpleSquare r;
  r.square = 2 * ctx.m * (x * x + ctx.a * x * y - y * y);
  if (r.square != pair({x, y}, {x, y}, ctx)) throw std::logic_error("ample_square: closed form disagrees with Gram");
  r.x_positive = sgn(x) > 0;
  r.y_positive = sgn(y) > 0;
  r.square_positive = sgn(r.square) > 0;
  return r;
}

RiemannRoch rr_h0(const LatticeContext& ctx, const LatticeElement& gamma, const LatticeElement& h) {
  RiemannRoch r;
  r.h_sq = pair(h, h, ctx);
  if (r.h_sq != 4) throw Error(ErrorCode::PreconditionFailed, "H^2 = " + r.h_sq.get_str() + ", expected 4");
  r.gamma_h = pair(gamma, h, ctx);
  r.gamma_sq = pair(gamma, gamma, ctx);
  r.degree_check = r.gamma_sq - 4 * r.gamma_h;
  if (sgn(r.degree_check) >= 0)
    throw Error(ErrorCode::PreconditionFailed,
                "deg(K - 4H) = " + r.degree_check.get_str() + " is not negative");
  r.h0 = Rational(4 * r.gamma_h) - make_rational(r.gamma_sq, 2);
  r.bound_ok = r.h0 <= 33;
  r.genus_warning = r.gamma_sq < -2;
  return r;
}

std::vector<RrCase> rr_cases() { return {{2, {1, 1}, {1, 2}}, {3, {2, 7}, {1, 3}}}; }

RrCase rr_case(long a) {
  for (const RrCase& c : rr_cases())
    if (c.a == a) return c;
  throw Error(ErrorCode::PreconditionFailed, "no Riemann-Roch case for a=" + std::to_string(a) + " (use 2 or 3)");
}

}  // namespace coq
