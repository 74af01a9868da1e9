#include "coquartic/cayley/kernel_map.hpp"

#include <future>
#include <type_traits>

#include "coquartic/error.hpp"

namespace coq {

std::string to_string(const KernelMapDescriptor& d) {
  return "(" + std::to_string(d.source) + "," + to_string(d.side) + "," + std::to_string(d.index) + ")";
}

std::array<KernelMapDescriptor, 6> all_descriptors() {
  return {{{0, Side::Right, 0},
           {0, Side::Left, 0},
           {1, Side::Right, 0},
           {1, Side::Left, 0},
           {2, Side::Right, 0},
           {2, Side::Left, 0}}};
}

int descriptor_slot(const KernelMapDescriptor& d) { return 2 * d.source + (d.side == Side::Left ? 1 : 0); }

namespace {

// Cofactor vector `index` of an adjugate: a column for right kernels, a row
// for left kernels.
template <typename R>
Vector4<R> cofactor_vector(const Matrix4<R>& adj, Side side, int index) {
  Vector4<R> v;
  for (int k = 0; k < 4; ++k) v[k] = side == Side::Right ? adj[k][index] : adj[index][k];
  return v;
}

std::array<int, 4> fallback_order(int first) {
  std::array<int, 4> order{first, 0, 0, 0};
  for (int k = 0, n = 1; k < 4; ++k)
    if (k != first) order[n++] = k;
  return order;
}

template <typename F>
ProjectivePoint<F> phi_exact(const Tritensor& t, const KernelMapDescriptor& d, const ProjectivePoint<F>& p) {
  Matrix4<F> m = contract_at(t, d.source, p.x);
  if (!is_zero(det4(m)))
    throw Error(ErrorCode::NotOnSurface, "point is not on Sigma_" + std::to_string(d.source));
  Matrix4<F> adj = adjugate4(m);
  for (int idx : fallback_order(d.index)) {
    Vector4<F> v = cofactor_vector(adj, d.side, idx);
    for (const F& c : v)
      if (!is_zero(c)) return normalized(ProjectivePoint<F>(std::move(v)));
  }
  throw Error(ErrorCode::KernelRankDeficient, "every cofactor vector vanishes at the point");
}

ComplexPoint phi_numeric(const Tritensor& t, const KernelMapDescriptor& d, const ComplexPoint& p0) {
  ComplexPoint p = normalized(p0);
  const long prec = p[0].precision();
  Matrix4<Complex> m = contract_at(t, d.source, p.x);

  Real hadamard(1L, prec);
  Real scale(prec);
  for (const auto& row : m) {
    Real n2(prec);
    for (const Complex& c : row) {
      n2 += c.norm();
      scale = Real::max(scale, c.abs());
    }
    hadamard *= sqrt(n2);
  }
  if (det4(m).abs() > Real::pow2(-prec / 4, prec) * hadamard)
    throw Error(ErrorCode::NotOnSurface, "point is not on Sigma_" + std::to_string(d.source) +
                                             " within 2^-" + std::to_string(prec / 4));

  Matrix4<Complex> adj = adjugate4(m);
  int best = -1;
  Real best_norm(prec);
  for (int idx : fallback_order(d.index)) {
    Real n2(prec);
    for (const Complex& c : cofactor_vector(adj, d.side, idx)) n2 += c.norm();
    if (best < 0 || n2 > best_norm) {
      best = idx;
      best_norm = n2;
    }
  }
  const Real floor = Real::pow2(-prec / 2, prec) * scale * scale * scale;
  if (sqrt(best_norm) <= floor) throw Error(ErrorCode::KernelRankDeficient, "every cofactor vector vanishes at the point");
  return normalized(ComplexPoint(cofactor_vector(adj, d.side, best)));
}

}  // namespace

Vector4<MultiPoly> kernel_polys(const Tritensor& t, const KernelMapDescriptor& d) {
  return cofactor_vector(adjugate4(contract(t, d.source)), d.side, d.index);
}

MapCertificate certify_map(const Tritensor& t, const KernelMapDescriptor& d) {
  MapCertificate cert;
  cert.descriptor = d;
  Vector4<MultiPoly> y = kernel_polys(t, d);
  if (y[0].is_zero() && y[1].is_zero() && y[2].is_zero() && y[3].is_zero())
    throw Error(ErrorCode::KernelRankDeficient, "kernel polynomials of " + to_string(d) + " vanish identically");
  const MultiPoly source = det4(contract(t, d.source));
  if (source.is_zero()) throw Error(ErrorCode::DegenerateTensor, "det T" + std::to_string(d.source) + " is zero");

  for (int target = 0; target < 3; ++target) {
    if (target == d.source) continue;
    MultiPoly image = det4(contract_at(t, target, y));
    if (image.is_zero()) {
      cert.ambiguous = true;
      cert.divisible_targets.push_back(target);
      continue;
    }
    auto [q, r] = mv_divide(image, source);
    if (!r.is_zero()) continue;
    cert.divisible_targets.push_back(target);
    if (cert.target < 0) {
      cert.target = target;
      cert.quotient = std::move(q);
    }
  }
  if (cert.divisible_targets.empty())
    throw Error(ErrorCode::NoDivisibleTarget, "no target quartic divides the image of " + to_string(d));
  if (cert.divisible_targets.size() > 1) cert.ambiguous = true;
  if (cert.target < 0) cert.target = cert.divisible_targets.front();
  return cert;
}

std::array<MapCertificate, 6> certify_all(const Tritensor& t) {
  std::array<std::future<MapCertificate>, 6> jobs;
  const auto descriptors = all_descriptors();
  for (std::size_t n = 0; n < descriptors.size(); ++n)
    jobs[n] = std::async(std::launch::async, [&t, d = descriptors[n]] { return certify_map(t, d); });
  std::array<MapCertificate, 6> out;
  for (std::size_t n = 0; n < jobs.size(); ++n) out[n] = jobs[n].get();
  return out;
}

template <typename F>
ProjectivePoint<F> phi(const Tritensor& t, const KernelMapDescriptor& d, const ProjectivePoint<F>& p) {
  if constexpr (std::is_same_v<F, Complex>) {
    return phi_numeric(t, d, p);
  } else {
    return phi_exact(t, d, p);
  }
}

template ProjectivePoint<Rational> phi(const Tritensor&, const KernelMapDescriptor&, const ProjectivePoint<Rational>&);
template ProjectivePoint<QuadExt> phi(const Tritensor&, const KernelMapDescriptor&, const ProjectivePoint<QuadExt>&);
template ProjectivePoint<Complex> phi(const Tritensor&, const KernelMapDescriptor&, const ProjectivePoint<Complex>&);

}  // namespace coq
