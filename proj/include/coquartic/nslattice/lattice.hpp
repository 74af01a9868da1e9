#pragma once

#include <array>
#include <string>
#include <vector>

#include "coquartic/exactalg/hpreal.hpp"
#include "coquartic/exactalg/rational.hpp"

namespace coq {

/// 2x2 integer matrix acting on column coordinates (x, y) of x + y theta.
struct IntMatrix2 {
  std::array<std::array<Integer, 2>, 2> e{};

  static IntMatrix2 identity();
  Integer trace() const { return e[0][0] + e[1][1]; }
  Integer det() const { return e[0][0] * e[1][1] - e[0][1] * e[1][0]; }
  IntMatrix2 transpose() const;
  IntMatrix2 operator-() const;
  friend IntMatrix2 operator*(const IntMatrix2& p, const IntMatrix2& q);
  friend bool operator==(const IntMatrix2& p, const IntMatrix2& q) { return p.e == q.e; }
};

using LatticeEndo = IntMatrix2;

/// Exact matrix power; negative k uses the integer inverse and needs
/// det = +-1 (PreconditionFailed otherwise).
IntMatrix2 power(const IntMatrix2& m, long k);

/// NS lattice m (2 a; a -2) on the basis {1, theta}, theta^2 = 1 + a theta.
struct LatticeContext {
  Integer m;
  Integer a;

  /// Throws PreconditionFailed unless m >= 2 and a >= 1.
  LatticeContext(long m, long a);
  IntMatrix2 gram() const;
  /// The Cayley-Oguiso lattice (4 2; 2 -4).
  static LatticeContext cayley_oguiso() { return {2, 1}; }
};

struct LatticeElement {
  Integer x;
  Integer y;
  friend bool operator==(const LatticeElement&, const LatticeElement&) = default;
};

std::string to_string(const LatticeElement& u);

/// u^T G v.
Integer pair(const LatticeElement& u, const LatticeElement& v, const LatticeContext& ctx);
/// (x1 + y1 t)(x2 + y2 t) with t^2 = 1 + a t.
LatticeElement multiply(const LatticeElement& u, const LatticeElement& v, const LatticeContext& ctx);
/// Matrix of v -> u v; column j is the image of the j-th basis vector.
LatticeEndo mult_matrix(const LatticeContext& ctx, const LatticeElement& u);
LatticeElement apply(const LatticeEndo& m, const LatticeElement& u);

enum class IsometryKind { Isometry, AntiIsometry, Neither };
std::string to_string(IsometryKind k);
IsometryKind is_isometry(const LatticeEndo& m, const LatticeContext& ctx);

/// theta^(2n), computed through powers of mult_matrix(theta^2) (det 1).
/// On the Cayley-Oguiso lattice this is D_n = eta^(2n).
LatticeElement dn_divisor(long n, const LatticeContext& ctx);

/// Eigenvalues (t +- sqrt(disc)) / 2 with disc = t^2 - 4 det, and the
/// entropy log max(|l1|, |l2|), clamped at 0.
struct EntropyReport {
  Integer trace;
  Integer det;
  Integer discriminant;
  Real spectral_radius;
  Real entropy;
  /// True when some eigenvalue has modulus <= 1, so "every eigenvalue
  /// outside the unit circle" fails even though the entropy is positive.
  bool small_eigenvalue = false;
};
EntropyReport entropy(const LatticeEndo& m, long precision = 256);

enum class LeeClass { SymplecticGenerator, AntiSymplecticGenerator, Both, Neither };
std::string to_string(LeeClass c);
/// m | a gives a symplectic generator, m | a^2 + 1 an anti-symplectic one.
LeeClass lee_classify(long m, long a);

struct AmpleSquare {
  Integer square;
  bool x_positive = false;
  bool y_positive = false;
  bool square_positive = false;
};
/// C = x + y theta; C^2 = 2m (x^2 + a x y - y^2), checked against the Gram
/// pairing.
AmpleSquare ample_square(const LatticeContext& ctx, const Integer& x, const Integer& y);

struct RiemannRoch {
  Integer gamma_h;
  Integer gamma_sq;
  Integer h_sq;
  /// Gamma^2 - 4 Gamma.H, must be negative.
  Integer degree_check;
  /// 4 Gamma.H - Gamma^2 / 2
  Rational h0;
  bool bound_ok = false;  // h0 <= 33
  /// Gamma^2 < -2: no smooth curve on a K3 has this class.
  bool genus_warning = false;
};
/// Throws PreconditionFailed when H^2 != 4 or degree_check >= 0.
RiemannRoch rr_h0(const LatticeContext& ctx, const LatticeElement& gamma, const LatticeElement& h);

/// The curve classes checked for a = 2 and a = 3.
struct RrCase {
  long a;
  LatticeElement gamma;
  LatticeElement h;
};
std::vector<RrCase> rr_cases();
/// Throws PreconditionFailed for a not in {2, 3}.
RrCase rr_case(long a);

}  // namespace coq
