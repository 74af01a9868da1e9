#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coquartic/beauville/involution.hpp"
#include "coquartic/cayley/loop.hpp"

namespace coq {

/// A tensor with its three quartics and six certified maps.
struct Triangle {
  Tritensor tensor;
  std::array<QuarticSurface, 3> surfaces;
  std::array<MapCertificate, 6> certs;
  bool ambiguous = false;

  static Triangle build(const Tritensor& t);
  const QuarticSurface& surface(int l) const { return surfaces[static_cast<std::size_t>(l)]; }
};

/// How Sigma_1 and Sigma_2 are identified with Sigma_0: through the direct
/// edge out of Sigma_0, or the two-step walk through the other surface.
struct Frame {
  bool sigma1_direct = true;
  bool sigma2_direct = false;

  /// Forward chain: Sigma_1 by its direct edge, Sigma_2 through Sigma_1.
  static Frame forward() { return {true, false}; }
  /// Reverse chain: Sigma_2 by its direct edge, Sigma_1 through Sigma_2.
  static Frame reverse() { return {false, true}; }
  friend bool operator==(const Frame&, const Frame&) = default;
};
std::string to_string(const Frame& f);
std::array<Frame, 4> all_frames();

/// Walk of surface indices from Sigma_0 to Sigma_l in the frame.
std::vector<int> frame_walk(const Frame& f, int l);

/// Moves the pair to Sigma_l along the frame, applies the Beauville
/// involution of quartic(T, l) there and brings the result back. l = 0 is
/// the plain involution of Sigma_0.
PointPair<Complex> conjugated_involution(const Triangle& tri, const Frame& frame, int l,
                                         const PointPair<Complex>& pair);

/// Pairs on Sigma_0 from two sampled lines (the i-th point of each).
std::vector<PointPair<Complex>> sample_pairs(const QuarticSurface& s0, std::uint64_t seed, int count,
                                             long precision);

struct OgCandidate {
  Orientation psi = Orientation::Forward;
  Frame frame;
  std::array<int, 3> order{};  // applied first to last: iota_order[2] o iota_order[1] o iota_order[0]
  double max_mismatch = 0;
  std::string error;  // non-empty when evaluation failed
  bool match = false;

  std::string label() const;
};

/// Matches within one frame. Consistent when each psi orientation has
/// exactly one matching order and the two orders are reverses of each
/// other (psi_rev = psi^-1 and each iota is an involution).
struct OgFrameSummary {
  Frame frame;
  std::vector<std::size_t> matches;  // candidate indices
  bool consistent = false;
};

struct OgReport {
  bool refused = false;
  std::string reason;
  long precision = 0;
  std::vector<std::uint64_t> seeds;
  int pairs_per_seed = 0;
  double tolerance = 0;
  /// iota_0 o iota_0 against the identity.
  double control_mismatch = 0;
  std::vector<OgCandidate> candidates;
  int match_count = 0;
  /// Index of the candidate with the smallest mismatch.
  std::size_t best = 0;
  std::vector<OgFrameSummary> frames;
};

/// Compares psi acting on pairs with every composition of the three
/// conjugated involutions, for 2 orientations x 4 frames x 6 orders. A
/// candidate matches when its mismatch stays below 2^(-precision/4) over
/// every sampled pair of every seed.
OgReport prop_og_experiment(const Triangle& tri, const std::vector<std::uint64_t>& seeds, long precision,
                            int pairs_per_seed = 3);

}  // namespace coq
