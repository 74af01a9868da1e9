#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coquartic/beauville/conjugation.hpp"
#include "coquartic/harness/io.hpp"
#include "coquartic/nslattice/lattice.hpp"

namespace coq {

struct SampleCounts {
  int beauville_pairs = 100;
  int orbit_steps = 8;
  int fixed_scan = 40;
  int og_seeds = 5;  // sampling seeds 1..og_seeds
  int og_pairs = 3;  // pairs per seed
};

/// Tolerances as negative powers of two.
struct ToleranceBits {
  long orbit = 100;
  long roundtrip = 100;
};

struct RunConfig {
  std::string command = "suite";
  std::uint64_t seed = 1;
  long precision = 256;
  long bound = 9;
  SampleCounts samples;
  ToleranceBits tolerance;
  std::string in_path;
  std::string out_path;

  /// PreconditionFailed when precision < 64, bound < 1 or a count is
  /// negative.
  void validate() const;
};
Json to_json(const RunConfig& c);

enum class CheckKind { Hard, Experiment };
enum class Verdict { Pass, Fail, Ambiguous, Error };
std::string to_string(CheckKind k);
std::string to_string(Verdict v);

struct CheckResult {
  std::string id;
  CheckKind kind = CheckKind::Hard;
  Verdict verdict = Verdict::Pass;
  std::optional<double> residual;
  Json detail = Json::object();
  std::string error;
  double seconds = 0;
};

struct VerificationReport {
  RunConfig config;
  std::vector<CheckResult> checks;

  /// 0 iff every hard check passed.
  int exit_status() const;
  /// Timings go in a separate top-level "timings" object, omitted when
  /// include_timings is false.
  Json to_json(bool include_timings = true) const;
};

Json to_json(const MapCertificate& c);
Json to_json(const OrbitReport& r);
Json to_json(const FixedPointReport& r);
Json to_json(const OgReport& r);
Json to_json(const InvolutionTrace<QuadExt>& tr);
Json to_json(const PointPair<Complex>& p, int digits = 30);
Json to_json(const RiemannRoch& r);
Json to_json(const EntropyReport& e);
Json to_json(const IntMatrix2& m);

/// Gram matrix, D_n table for |n| <= n_range, generator and theta actions,
/// eigenvalue data, entropy and classification; the Riemann-Roch case
/// when a is 2 or 3.
Json lattice_report(const LatticeContext& ctx, long n_range = 10);

}  // namespace coq
