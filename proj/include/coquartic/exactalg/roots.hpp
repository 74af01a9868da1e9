#pragma once

#include <vector>

#include "coquartic/exactalg/hpreal.hpp"
#include "coquartic/exactalg/quadext.hpp"
#include "coquartic/exactalg/unipoly.hpp"

namespace coq {

/// sum |c_i| |t|^i : the magnitude scale against which |p(t)| is judged.
Real evaluation_scale(const UniPoly<Complex>& p, const Complex& t);

/// Residual tolerance 2^(-precision/2).
Real residual_tolerance(long precision);

struct RootOptions {
  long precision = 256;
  /// 0 picks a budget proportional to the precision.
  int max_iterations = 0;
};

/// All complex roots, with multiplicity, by Aberth-Ehrlich simultaneous
/// iteration. Every returned root r satisfies
///   |p(r)| <= 2^(-precision/2) * evaluation_scale(p, r).
/// Throws Error(DegreeMismatch) for constant input and Error(NonConvergence)
/// when the iteration budget runs out before the residual bound is met.
std::vector<Complex> roots_hp(const UniPoly<Complex>& p, const RootOptions& options = {});

/// Both roots of a quadratic with coefficients in Q or Q(sqrt d).
struct QuadRoots {
  QuadExt plus;   // (-b + sqrt(disc)) / 2a
  QuadExt minus;  // (-b - sqrt(disc)) / 2a
  /// Radicand of the field holding the roots (0 when both are rational).
  Integer d;
};

/// Throws Error(DegreeMismatch) unless deg q == 2; Error(NestedExtension) when
/// the roots would need a second quadratic extension.
QuadRoots quad_solve(const UniPoly<Rational>& q);
QuadRoots quad_solve(const UniPoly<QuadExt>& q);

}  // namespace coq
