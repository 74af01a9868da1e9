#include "coquartic/cayley/loop.hpp"

#include <algorithm>

#include "coquartic/error.hpp"

namespace coq {

std::string to_string(Orientation o) { return o == Orientation::Forward ? "forward" : "reverse"; }

std::string to_string(InverseVerdict::Status s) {
  switch (s) {
    case InverseVerdict::Status::Found: return "found";
    case InverseVerdict::Status::Ambiguous: return "ambiguous";
    case InverseVerdict::Status::NotFound: return "not-found";
  }
  return "?";
}

KernelMapDescriptor edge(const std::array<MapCertificate, 6>& certs, int source, int target) {
  const MapCertificate* fallback = nullptr;
  for (const MapCertificate& c : certs) {
    if (c.descriptor.source != source) continue;
    if (!c.ambiguous && c.target == target) return c.descriptor;
    if (fallback == nullptr && std::find(c.divisible_targets.begin(), c.divisible_targets.end(), target) !=
                                   c.divisible_targets.end())
      fallback = &c;
  }
  if (fallback != nullptr) return fallback->descriptor;
  throw Error(ErrorCode::NoDivisibleTarget,
              "no certified map Sigma_" + std::to_string(source) + " -> Sigma_" + std::to_string(target));
}

LoopMap loop_map(const std::array<MapCertificate, 6>& certs, Orientation orientation) {
  const std::array<int, 4> stops = orientation == Orientation::Forward ? std::array<int, 4>{0, 1, 2, 0}
                                                                       : std::array<int, 4>{0, 2, 1, 0};
  LoopMap loop;
  loop.orientation = orientation;
  for (int n = 0; n < 3; ++n) loop.path[n] = edge(certs, stops[n], stops[n + 1]);
  loop.ambiguous = std::any_of(certs.begin(), certs.end(), [](const MapCertificate& c) { return c.ambiguous; });
  return loop;
}

std::vector<KernelMapDescriptor> path_along(const std::array<MapCertificate, 6>& certs, const std::vector<int>& stops) {
  std::vector<KernelMapDescriptor> out;
  for (std::size_t n = 0; n + 1 < stops.size(); ++n) out.push_back(edge(certs, stops[n], stops[n + 1]));
  return out;
}

InverseVerdict inverse_pair_check(const Tritensor& t, const std::array<MapCertificate, 6>& certs,
                                  const KernelMapDescriptor& d, std::uint64_t seed, long precision,
                                  const std::vector<RationalPoint>& exact_points) {
  InverseVerdict v;
  v.forward = d;
  const MapCertificate& cert = certs[static_cast<std::size_t>(descriptor_slot(d))];
  if (cert.ambiguous) {
    v.status = InverseVerdict::Status::Ambiguous;
    return v;
  }
  const std::vector<ComplexPoint> sampled = sample_points(quartic(t, d.source), seed, 2, precision).points;
  const Real tol = Real::pow2(-precision / 4, precision);

  std::vector<KernelMapDescriptor> matches;
  std::vector<double> distances;
  for (Side side : {Side::Right, Side::Left}) {
    KernelMapDescriptor back{cert.target, side, 0};
    bool ok = true;
    double worst = 0;
    try {
      for (const RationalPoint& p : exact_points) {
        if (!projectively_equal(phi(t, back, phi(t, d, p)), p)) {
          ok = false;
          break;
        }
      }
      for (std::size_t n = 0; ok && n < sampled.size(); ++n) {
        Real dist = projective_distance(phi(t, back, phi(t, d, sampled[n])), sampled[n]);
        worst = std::max(worst, dist.to_double());
        if (dist > tol) ok = false;
      }
    } catch (const Error&) {
      ok = false;
    }
    if (ok) {
      matches.push_back(back);
      distances.push_back(worst);
    }
  }
  v.points_checked = exact_points.size() + sampled.size();
  if (matches.size() == 1) {
    v.status = InverseVerdict::Status::Found;
    v.inverse = matches.front();
    v.max_distance = distances.front();
  } else {
    v.status = matches.empty() ? InverseVerdict::Status::NotFound : InverseVerdict::Status::Ambiguous;
  }
  return v;
}

OrbitReport orbit(const QuarticSurface& s0, const PointMap& psi, const ComplexPoint& p, int n, long precision,
                  const Real& tolerance, const PointMap& inverse) {
  if (precision < kMinPrecision) throw Error(ErrorCode::PreconditionFailed, "precision must be at least 64 bits");
  OrbitReport rep;
  ComplexPoint cur = normalized(ComplexPoint(Vector4<Complex>{p[0].widened(precision), p[1].widened(precision),
                                                              p[2].widened(precision), p[3].widened(precision)}));
  auto record = [&](const ComplexPoint& q, int step) {
    Real r = surface_residual(s0.F(), q);
    rep.residuals.push_back(r.to_double());
    rep.max_residual = std::max(rep.max_residual, r.to_double());
    if (r > tolerance)
      throw Error(ErrorCode::PrecisionExhausted, "orbit step " + std::to_string(step) + " residual " + r.to_string(6) +
                                                     " exceeds tolerance " + tolerance.to_string(6) +
                                                     "; raise the precision");
  };
  record(cur, 0);
  rep.points.push_back(cur);
  for (int k = 1; k <= n; ++k) {
    ComplexPoint next = psi(cur);
    if (inverse) {
      double back = projective_distance(inverse(next), cur).to_double();
      rep.max_roundtrip = std::max(rep.max_roundtrip.value_or(0.0), back);
    }
    record(next, k);
    double dist = projective_distance(next, rep.points.front()).to_double();
    rep.min_return_distance = std::min(rep.min_return_distance.value_or(dist), dist);
    rep.points.push_back(next);
    cur = std::move(next);
  }
  return rep;
}

FixedPointReport fixed_point_scan(const QuarticSurface& s0, const PointMap& psi, int samples, std::uint64_t seed,
                                  long precision) {
  FixedPointReport rep;
  const int lines = (samples + 3) / 4;
  std::vector<ComplexPoint> pts = sample_points(s0, seed, lines, precision).points;
  if (static_cast<int>(pts.size()) > samples) pts.resize(static_cast<std::size_t>(samples));
  bool first = true;
  for (std::size_t n = 0; n < pts.size(); ++n) {
    double dist = 0;
    try {
      dist = projective_distance(psi(pts[n]), pts[n]).to_double();
    } catch (const Error&) {
      ++rep.skipped;
      continue;
    }
    ++rep.samples;
    if (first || dist < rep.min_distance) {
      rep.min_distance = dist;
      rep.argmin = n;
      first = false;
    }
  }
  return rep;
}

}  // namespace coq
