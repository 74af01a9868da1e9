#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "coquartic/cayley/kernel_map.hpp"

namespace coq {

enum class Orientation {
  Forward,  // Sigma_0 -> Sigma_1 -> Sigma_2 -> Sigma_0
  Reverse,  // Sigma_0 -> Sigma_2 -> Sigma_1 -> Sigma_0
};
std::string to_string(Orientation o);

/// Composition of three certified kernel maps returning to Sigma_0.
struct LoopMap {
  Orientation orientation = Orientation::Forward;
  std::array<KernelMapDescriptor, 3> path{};
  bool ambiguous = false;

  template <typename F>
  ProjectivePoint<F> apply(const Tritensor& t, const ProjectivePoint<F>& p) const {
    ProjectivePoint<F> q = p;
    for (const KernelMapDescriptor& d : path) q = phi(t, d, q);
    return q;
  }
};

/// Descriptor out of `source` whose certified target is `target`, preferring
/// unambiguous certificates. Throws NoDivisibleTarget if none.
KernelMapDescriptor edge(const std::array<MapCertificate, 6>& certs, int source, int target);

/// Builds psi along the triangle from the certificates.
LoopMap loop_map(const std::array<MapCertificate, 6>& certs, Orientation orientation);

/// Certified edges along a walk of surface indices, e.g. {0, 1, 2}.
std::vector<KernelMapDescriptor> path_along(const std::array<MapCertificate, 6>& certs, const std::vector<int>& stops);

struct InverseVerdict {
  enum class Status { Found, Ambiguous, NotFound };
  Status status = Status::NotFound;
  KernelMapDescriptor forward;
  std::optional<KernelMapDescriptor> inverse;
  double max_distance = 0;  // over checked points, for the chosen inverse
  std::size_t points_checked = 0;
};
std::string to_string(InverseVerdict::Status s);

/// Tries both sides on the target and keeps the one that sends phi(p) back
/// to p: exactly on the given rational points, within 2^(-precision/4) on
/// points sampled on the source quartic.
InverseVerdict inverse_pair_check(const Tritensor& t, const std::array<MapCertificate, 6>& certs,
                                  const KernelMapDescriptor& d, std::uint64_t seed, long precision,
                                  const std::vector<RationalPoint>& exact_points = {});

using PointMap = std::function<ComplexPoint(const ComplexPoint&)>;

struct OrbitReport {
  std::vector<ComplexPoint> points;  // p, psi(p), ..., psi^n(p)
  std::vector<double> residuals;     // surface residual of each point
  double max_residual = 0;
  /// min over k = 1..n of d(p, psi^k(p)); absent for n = 0.
  std::optional<double> min_return_distance;
  /// max over steps of d(psi^{-1}(psi(p_k)), p_k) when an inverse is given.
  std::optional<double> max_roundtrip;
};

/// Iterates psi n times from p, renormalizing each step. Throws
/// PrecisionExhausted when a residual exceeds `tolerance`.
OrbitReport orbit(const QuarticSurface& s0, const PointMap& psi, const ComplexPoint& p, int n, long precision,
                  const Real& tolerance, const PointMap& inverse = {});

struct FixedPointReport {
  std::size_t samples = 0;
  double min_distance = 0;  // min over samples of d(p, psi(p))
  std::size_t argmin = 0;
  int skipped = 0;  // samples where psi was undefined
};

/// Samples points on Sigma_0 and reports how close psi comes to fixing one.
FixedPointReport fixed_point_scan(const QuarticSurface& s0, const PointMap& psi, int samples, std::uint64_t seed,
                                  long precision);

}  // namespace coq
