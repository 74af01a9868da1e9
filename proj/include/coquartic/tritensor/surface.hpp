#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coquartic/exactalg/hpreal.hpp"
#include "coquartic/exactalg/multipoly.hpp"
#include "coquartic/exactalg/unipoly.hpp"
#include "coquartic/tritensor/tensor.hpp"

namespace coq {

/// Homogeneous quartic F in x0..x3. provenance is "T0", "T1", "T2" for
/// determinantal quartics, or a free-form tag for external input.
class QuarticSurface {
 public:
  /// Throws DegreeMismatch unless F is homogeneous of degree 4.
  QuarticSurface(MultiPoly f, std::string provenance);

  const MultiPoly& F() const { return f_; }
  const std::string& provenance() const { return provenance_; }

 private:
  MultiPoly f_;
  std::string provenance_;
};

/// det T_l(x). Throws DegenerateTensor when it vanishes identically.
QuarticSurface quartic(const Tritensor& t, int l);

/// f(a + t b) as a univariate polynomial.
template <typename F>
UniPoly<F> restrict_to_line(const MultiPoly& f, const Vector4<F>& a, const Vector4<F>& b) {
  std::array<UniPoly<F>, kNumVars> x{UniPoly<F>::linear(a[0], b[0]), UniPoly<F>::linear(a[1], b[1]),
                                     UniPoly<F>::linear(a[2], b[2]), UniPoly<F>::linear(a[3], b[3])};
  return f.evaluate(x);
}

/// |f(p)| relative to sum |c_a| |p^a|, the natural size of f(p) under
/// rounding of p.
Real surface_residual(const MultiPoly& f, const ComplexPoint& p);

/// 2^(-precision/2), the acceptance bound for numeric points on a surface.
Real surface_tolerance(long precision);

struct SampleResult {
  std::vector<ComplexPoint> points;
  int lines_on_surface = 0;  // restriction identically zero, line skipped
  int rejected = 0;          // roots failing the residual bound
};

/// Intersects n random integer lines with S. Roots are found with guard
/// bits; points come back at `precision`, scaled so the largest coordinate
/// is 1.
SampleResult sample_points(const QuarticSurface& s, std::uint64_t seed, int n, long precision);

/// Intersection of S with the line a + t b at working precision.
SampleResult points_on_line(const QuarticSurface& s, const Vector4<Rational>& a, const Vector4<Rational>& b,
                            long precision);

struct SmoothnessReport {
  std::size_t points = 0;
  double min_gradient = 0;           // over all points, projectively normalized
  std::vector<std::size_t> flagged;  // indices of candidate singular points
  double threshold = 0;
};

/// Gradient norm at p scaled to max|p_i| = 1 and divided by the largest
/// coefficient of F; points below 2^(-precision/4) are flagged.
SmoothnessReport smoothness_probe(const QuarticSurface& s, const std::vector<ComplexPoint>& points, long precision);

}  // namespace coq
