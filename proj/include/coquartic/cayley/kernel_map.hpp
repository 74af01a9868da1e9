#pragma once

#include <array>
#include <string>
#include <vector>

#include "coquartic/tritensor/surface.hpp"

namespace coq {

/// A cofactor-kernel map out of Sigma_source. For side Right the kernel
/// vector is column `index` of adj(T_l(x)), so T_l(x) Y = det e_index; for
/// Left it is row `index`, so Y^T T_l(x) = det e_index^T. When that column
/// (row) vanishes at a point, the others are tried in order 0, 1, 2, 3.
struct KernelMapDescriptor {
  int source = 0;
  Side side = Side::Right;
  int index = 0;

  friend bool operator==(const KernelMapDescriptor&, const KernelMapDescriptor&) = default;
};

std::string to_string(const KernelMapDescriptor& d);

/// The six maps (source, side) with index 0, in the order
/// (0,R) (0,L) (1,R) (1,L) (2,R) (2,L).
std::array<KernelMapDescriptor, 6> all_descriptors();
int descriptor_slot(const KernelMapDescriptor& d);

/// Raw cofactor kernel polynomials (degree 3, no common factor removed).
Vector4<MultiPoly> kernel_polys(const Tritensor& t, const KernelMapDescriptor& d);

/// det T_target(Y(x)) = quotient(x) * det T_source(x).
struct MapCertificate {
  KernelMapDescriptor descriptor;
  int target = -1;
  MultiPoly quotient;
  /// Every target tested, with divisibility outcome. Ambiguous when more
  /// than one target divides or an image determinant vanishes identically.
  std::vector<int> divisible_targets;
  bool ambiguous = false;
};

/// Finds the target by exact division. Throws NoDivisibleTarget when no
/// candidate divides, KernelRankDeficient when Y is identically zero.
MapCertificate certify_map(const Tritensor& t, const KernelMapDescriptor& d);

/// Certificates of all six maps, computed concurrently, in
/// all_descriptors() order.
std::array<MapCertificate, 6> certify_all(const Tritensor& t);

/// Evaluates the kernel map at a point of Sigma_source. Exact for Rational
/// and QuadExt; for Complex the point must satisfy |det T_l(p)| below
/// 2^(-precision/4) times the product of row norms. The numeric path takes
/// the largest cofactor vector (all are proportional to the same kernel
/// vector), the exact path the first nonzero one in fallback order.
/// Errors: NotOnSurface, KernelRankDeficient.
template <typename F>
ProjectivePoint<F> phi(const Tritensor& t, const KernelMapDescriptor& d, const ProjectivePoint<F>& p);

extern template ProjectivePoint<Rational> phi(const Tritensor&, const KernelMapDescriptor&,
                                              const ProjectivePoint<Rational>&);
extern template ProjectivePoint<QuadExt> phi(const Tritensor&, const KernelMapDescriptor&,
                                             const ProjectivePoint<QuadExt>&);
extern template ProjectivePoint<Complex> phi(const Tritensor&, const KernelMapDescriptor&,
                                             const ProjectivePoint<Complex>&);

}  // namespace coq
