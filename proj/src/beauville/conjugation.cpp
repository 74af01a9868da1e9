#include "coquartic/beauville/conjugation.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <map>

#include "coquartic/error.hpp"
#include "coquartic/rng.hpp"

namespace coq {

Triangle Triangle::build(const Tritensor& t) {
  std::array<MapCertificate, 6> certs = certify_all(t);
  bool ambiguous = std::any_of(certs.begin(), certs.end(), [](const MapCertificate& c) { return c.ambiguous; });
  return Triangle{t, {quartic(t, 0), quartic(t, 1), quartic(t, 2)}, std::move(certs), ambiguous};
}

std::string to_string(const Frame& f) {
  return std::string("sigma1:") + (f.sigma1_direct ? "direct" : "two-step") + ",sigma2:" +
         (f.sigma2_direct ? "direct" : "two-step");
}

std::array<Frame, 4> all_frames() { return {{Frame::forward(), Frame::reverse(), {true, true}, {false, false}}}; }

std::vector<int> frame_walk(const Frame& f, int l) {
  if (l == 0) return {0};
  if (l == 1) return f.sigma1_direct ? std::vector<int>{0, 1} : std::vector<int>{0, 2, 1};
  return f.sigma2_direct ? std::vector<int>{0, 2} : std::vector<int>{0, 1, 2};
}

PointPair<Complex> conjugated_involution(const Triangle& tri, const Frame& frame, int l,
                                         const PointPair<Complex>& pair) {
  std::vector<int> walk = frame_walk(frame, l);
  const std::vector<KernelMapDescriptor> there = path_along(tri.certs, walk);
  std::reverse(walk.begin(), walk.end());
  const std::vector<KernelMapDescriptor> back = path_along(tri.certs, walk);

  auto move = [&](ComplexPoint p, const std::vector<KernelMapDescriptor>& path) {
    for (const KernelMapDescriptor& d : path) p = phi(tri.tensor, d, p);
    return p;
  };
  PointPair<Complex> on_l = make_point_pair(move(pair.first, there), move(pair.second, there));
  PointPair<Complex> swapped = involution(tri.surface(l), on_l);
  return make_point_pair(move(swapped.first, back), move(swapped.second, back));
}

std::vector<PointPair<Complex>> sample_pairs(const QuarticSurface& s0, std::uint64_t seed, int count,
                                             long precision) {
  std::vector<PointPair<Complex>> out;
  const Rng root(seed);
  for (std::uint64_t block = 0; static_cast<int>(out.size()) < count && block < 64; ++block) {
    std::vector<ComplexPoint> a = sample_points(s0, root.split(2 * block).seed(), 1, precision).points;
    std::vector<ComplexPoint> b = sample_points(s0, root.split(2 * block + 1).seed(), 1, precision).points;
    for (std::size_t i = 0; i < std::min(a.size(), b.size()) && static_cast<int>(out.size()) < count; ++i)
      out.push_back(make_point_pair(a[i], b[i]));
  }
  return out;
}

std::string OgCandidate::label() const {
  return "psi:" + to_string(psi) + " frame:(" + to_string(frame) + ") order:iota" + std::to_string(order[2]) +
         "*iota" + std::to_string(order[1]) + "*iota" + std::to_string(order[0]);
}

namespace {

constexpr std::array<std::array<int, 3>, 6> kOrders{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

struct SeedOutcome {
  std::vector<double> mismatch;    // per candidate
  std::vector<std::string> error;  // per candidate
  double control = 0;
  std::string control_error;
};

std::vector<OgCandidate> candidate_grid() {
  std::vector<OgCandidate> grid;
  for (Orientation o : {Orientation::Forward, Orientation::Reverse})
    for (const Frame& f : all_frames())
      for (const auto& order : kOrders) grid.push_back({o, f, order, 0, "", false});
  return grid;
}

SeedOutcome run_seed(const Triangle& tri, const std::vector<OgCandidate>& grid, std::uint64_t seed, long precision,
                     int pairs_per_seed) {
  SeedOutcome out;
  out.mismatch.assign(grid.size(), 0);
  out.error.assign(grid.size(), "");
  const std::vector<PointPair<Complex>> pairs = sample_pairs(tri.surface(0), seed, pairs_per_seed, precision);
  const LoopMap fwd = loop_map(tri.certs, Orientation::Forward);
  const LoopMap rev = loop_map(tri.certs, Orientation::Reverse);

  for (const PointPair<Complex>& pair : pairs) {
    try {
      PointPair<Complex> twice =
          conjugated_involution(tri, Frame::forward(), 0, conjugated_involution(tri, Frame::forward(), 0, pair));
      out.control = std::max(out.control, pair_distance(twice, pair).to_double());
    } catch (const Error& e) {
      out.control_error = e.what();
    }

    std::map<Orientation, std::optional<PointPair<Complex>>> psi_image;
    std::map<Orientation, std::string> psi_error;
    for (const LoopMap* loop : {&fwd, &rev}) {
      try {
        psi_image[loop->orientation] =
            make_point_pair(loop->apply(tri.tensor, pair.first), loop->apply(tri.tensor, pair.second));
      } catch (const Error& e) {
        psi_error[loop->orientation] = e.what();
      }
    }
    for (std::size_t n = 0; n < grid.size(); ++n) {
      const OgCandidate& c = grid[n];
      if (!out.error[n].empty()) continue;
      if (!psi_image[c.psi]) {
        out.error[n] = "psi: " + psi_error[c.psi];
        continue;
      }
      try {
        PointPair<Complex> cur = pair;
        for (int l : c.order) cur = conjugated_involution(tri, c.frame, l, cur);
        out.mismatch[n] = std::max(out.mismatch[n], pair_distance(cur, *psi_image[c.psi]).to_double());
      } catch (const Error& e) {
        out.error[n] = e.what();
      }
    }
  }
  return out;
}

}  // namespace

OgReport prop_og_experiment(const Triangle& tri, const std::vector<std::uint64_t>& seeds, long precision,
                            int pairs_per_seed) {
  OgReport rep;
  rep.precision = precision;
  rep.seeds = seeds;
  rep.pairs_per_seed = pairs_per_seed;
  rep.tolerance = Real::pow2(-precision / 4, precision).to_double();
  if (tri.ambiguous) {
    rep.refused = true;
    rep.reason = "ambiguous kernel-map certificates (non-generic tensor)";
    return rep;
  }
  rep.candidates = candidate_grid();

  std::vector<std::future<SeedOutcome>> jobs;
  for (std::uint64_t seed : seeds)
    jobs.push_back(std::async(std::launch::async, [&, seed] {
      return run_seed(tri, rep.candidates, seed, precision, pairs_per_seed);
    }));
  for (auto& job : jobs) {
    SeedOutcome o = job.get();
    rep.control_mismatch = std::max(rep.control_mismatch, o.control);
    if (!o.control_error.empty() && rep.reason.empty()) rep.reason = "control failed: " + o.control_error;
    for (std::size_t n = 0; n < rep.candidates.size(); ++n) {
      OgCandidate& c = rep.candidates[n];
      c.max_mismatch = std::max(c.max_mismatch, o.mismatch[n]);
      if (c.error.empty()) c.error = o.error[n];
    }
  }
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t n = 0; n < rep.candidates.size(); ++n) {
    OgCandidate& c = rep.candidates[n];
    c.match = c.error.empty() && c.max_mismatch <= rep.tolerance;
    if (c.match) ++rep.match_count;
    if (c.error.empty() && c.max_mismatch < best) {
      best = c.max_mismatch;
      rep.best = n;
    }
  }
  for (const Frame& f : all_frames()) {
    OgFrameSummary sum{f, {}, false};
    for (std::size_t n = 0; n < rep.candidates.size(); ++n)
      if (rep.candidates[n].match && rep.candidates[n].frame == f) sum.matches.push_back(n);
    if (sum.matches.size() == 2) {
      const OgCandidate& x = rep.candidates[sum.matches[0]];
      const OgCandidate& y = rep.candidates[sum.matches[1]];
      const std::array<int, 3> reversed{y.order[2], y.order[1], y.order[0]};
      sum.consistent = x.psi != y.psi && x.order == reversed;
    }
    rep.frames.push_back(sum);
  }
  return rep;
}

}  // namespace coq
