#include "coquartic/harness/report.hpp"

#include "coquartic/error.hpp"

namespace coq {

namespace {

Json integer(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Json complex_point(const ComplexPoint& p, int digits) {
  Json arr = Json::array();
  for (int i = 0; i < 4; ++i) arr.push_back(Json::array({p[i].re().to_string(digits), p[i].im().to_string(digits)}));
  return arr;
}

// Ascending coefficients.
Json coefficients(const UniPoly<QuadExt>& u) {
  Json arr = Json::array();
  for (const QuadExt& c : u.coeffs()) arr.push_back(format_quadext(c));
  return arr;
}

}  // namespace

void RunConfig::validate() const {
  auto fail = [](const std::string& what) { throw Error(ErrorCode::PreconditionFailed, what); };
  if (precision < kMinPrecision) fail("precision must be at least 64 bits, got " + std::to_string(precision));
  if (bound < 1) fail("bound must be positive");
  if (samples.beauville_pairs < 0 || samples.orbit_steps < 0 || samples.fixed_scan < 0 || samples.og_seeds < 0 ||
      samples.og_pairs < 0)
    fail("sample counts must be non-negative");
  if (tolerance.orbit < 1 || tolerance.roundtrip < 1) fail("tolerance bits must be positive");
}

Json to_json(const RunConfig& c) {
  return Json{{"command", c.command},
              {"seed", c.seed},
              {"precision", c.precision},
              {"bound", c.bound},
              {"samples",
               {{"beauville_pairs", c.samples.beauville_pairs},
                {"orbit_steps", c.samples.orbit_steps},
                {"fixed_scan", c.samples.fixed_scan},
                {"og_seeds", c.samples.og_seeds},
                {"og_pairs", c.samples.og_pairs}}},
              {"tolerance_bits", {{"orbit", c.tolerance.orbit}, {"roundtrip", c.tolerance.roundtrip}}},
              {"in", c.in_path},
              {"out", c.out_path}};
}

std::string to_string(CheckKind k) { return k == CheckKind::Hard ? "hard" : "experiment"; }

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Ambiguous: return "ambiguous";
    case Verdict::Error: return "error";
  }
  return "error";
}

int VerificationReport::exit_status() const {
  for (const CheckResult& c : checks)
    if (c.kind == CheckKind::Hard && c.verdict != Verdict::Pass) return 1;
  return 0;
}

Json VerificationReport::to_json(bool include_timings) const {
  Json checks_json = Json::array();
  Json timings = Json::object();
  int hard_failed = 0;
  for (const CheckResult& c : checks) {
    Json j{{"id", c.id}, {"kind", coq::to_string(c.kind)}, {"verdict", coq::to_string(c.verdict)}};
    j["residual"] = c.residual ? Json(*c.residual) : Json(nullptr);
    if (!c.error.empty()) j["error"] = c.error;
    j["detail"] = c.detail;
    checks_json.push_back(j);
    timings[c.id] = c.seconds;
    if (c.kind == CheckKind::Hard && c.verdict != Verdict::Pass) ++hard_failed;
  }
  Json out{{"config", coq::to_json(config)},
           {"exit_status", exit_status()},
           {"hard_failures", hard_failed},
           {"checks", checks_json}};
  if (include_timings) out["timings"] = timings;
  return out;
}

Json to_json(const MapCertificate& c) {
  Json j{{"source", c.descriptor.source},
         {"side", to_string(c.descriptor.side)},
         {"row", c.descriptor.index},
         {"target", c.target},
         {"quotient", format_poly(c.quotient)}};
  j["divisible_targets"] = c.divisible_targets;
  j["ambiguous"] = c.ambiguous;
  return j;
}

Json to_json(const OrbitReport& r) {
  Json j{{"steps", r.points.empty() ? 0 : r.points.size() - 1}, {"max_residual", r.max_residual}};
  j["residuals"] = r.residuals;
  j["min_return_distance"] = r.min_return_distance ? Json(*r.min_return_distance) : Json(nullptr);
  j["max_roundtrip"] = r.max_roundtrip ? Json(*r.max_roundtrip) : Json(nullptr);
  Json pts = Json::array();
  for (const ComplexPoint& p : r.points) pts.push_back(format_point(p, 20));
  j["points"] = pts;
  return j;
}

Json to_json(const FixedPointReport& r) {
  return Json{{"samples", r.samples}, {"min_distance", r.min_distance}, {"argmin", r.argmin}, {"skipped", r.skipped}};
}

Json to_json(const OgReport& r) {
  Json j{{"refused", r.refused},
         {"reason", r.reason},
         {"precision", r.precision},
         {"seeds", r.seeds},
         {"pairs_per_seed", r.pairs_per_seed},
         {"tolerance", r.tolerance},
         {"control_mismatch", r.control_mismatch},
         {"match_count", r.match_count}};
  Json table = Json::array();
  for (const OgCandidate& c : r.candidates) {
    Json row{{"psi", to_string(c.psi)},
             {"frame", to_string(c.frame)},
             {"order", "iota" + std::to_string(c.order[2]) + "*iota" + std::to_string(c.order[1]) + "*iota" +
                           std::to_string(c.order[0])},
             {"max_mismatch", c.error.empty() ? Json(c.max_mismatch) : Json(nullptr)},
             {"match", c.match}};
    if (!c.error.empty()) row["error"] = c.error;
    table.push_back(row);
  }
  j["candidates"] = table;
  Json frames = Json::array();
  for (const OgFrameSummary& f : r.frames) {
    Json labels = Json::array();
    for (std::size_t n : f.matches) labels.push_back(r.candidates[n].label());
    frames.push_back(Json{{"frame", to_string(f.frame)}, {"matches", labels}, {"consistent", f.consistent}});
  }
  j["frames"] = frames;
  j["best"] = r.refused || r.candidates.empty() ? Json(nullptr) : Json(r.candidates[r.best].label());
  return j;
}

Json to_json(const InvolutionTrace<QuadExt>& tr) {
  return Json{{"pair", {format_point(tr.result.first), format_point(tr.result.second)}},
              {"restriction", coefficients(tr.restriction)},
              {"residual", coefficients(tr.residual)},
              {"t_plus", format_quadext(tr.t_plus)},
              {"t_minus", format_quadext(tr.t_minus)},
              {"reparametrized", tr.reparametrized}};
}

Json to_json(const PointPair<Complex>& p, int digits) {
  return Json{{"first", complex_point(p.first, digits)}, {"second", complex_point(p.second, digits)}};
}

Json to_json(const RiemannRoch& r) {
  return Json{{"gamma_h", integer(r.gamma_h)},   {"gamma_sq", integer(r.gamma_sq)},
              {"h_sq", integer(r.h_sq)},         {"degree_check", integer(r.degree_check)},
              {"h0", format_rational(r.h0)},     {"bound_ok", r.bound_ok},
              {"genus_warning", r.genus_warning}};
}

Json to_json(const EntropyReport& e) {
  return Json{{"eigenvalues", {{"trace", integer(e.trace)}, {"det", integer(e.det)}, {"discriminant", integer(e.discriminant)}}},
              {"spectral_radius", e.spectral_radius.to_string(30)},
              {"entropy", e.entropy.to_string(30)},
              {"small_eigenvalue", e.small_eigenvalue}};
}

Json to_json(const IntMatrix2& m) {
  return Json::array({Json::array({integer(m.e[0][0]), integer(m.e[0][1])}),
                      Json::array({integer(m.e[1][0]), integer(m.e[1][1])})});
}

Json lattice_report(const LatticeContext& ctx, long n_range) {
  const LatticeElement theta{0, 1};
  const bool co = ctx.m == 2 && ctx.a == 1;
  Json j{{"m", integer(ctx.m)}, {"a", integer(ctx.a)}, {"gram", to_json(ctx.gram())}};

  Json dn = Json::array();
  for (long n = -n_range; n <= n_range; ++n) {
    const LatticeElement d = dn_divisor(n, ctx);
    dn.push_back(Json{{"n", n}, {"x", integer(d.x)}, {"y", integer(d.y)}, {"square", integer(pair(d, d, ctx))}});
  }
  j["dn_table"] = dn;

  const LatticeEndo t = mult_matrix(ctx, theta);
  j["theta"] = Json{{"matrix", to_json(t)}, {"kind", to_string(is_isometry(t, ctx))}};
  // The automorphism acts as eta^6 on the Cayley-Oguiso lattice; elsewhere
  // the report uses theta^2, the step between consecutive D_n.
  const long k = co ? 6 : 2;
  const LatticeEndo g = power(t, k);
  const EntropyReport e = entropy(g);
  Json gen{{"power_of_theta", k}, {"matrix", to_json(g)}, {"kind", to_string(is_isometry(g, ctx))}};
  gen.update(to_json(e));
  if (e.small_eigenvalue)
    gen["note"] = "an eigenvalue lies in the closed unit disc; entropy is the log of the spectral radius";
  j["generator"] = gen;

  if (ctx.m.fits_slong_p() && ctx.a.fits_slong_p())
    j["classification"] = to_string(lee_classify(ctx.m.get_si(), ctx.a.get_si()));
  if (ctx.m == 2 && (ctx.a == 2 || ctx.a == 3)) {
    const RrCase c = rr_case(ctx.a.get_si());
    Json rr = to_json(rr_h0(ctx, c.gamma, c.h));
    rr["gamma"] = to_string(c.gamma);
    rr["h"] = to_string(c.h);
    j["riemann_roch"] = rr;
  }
  return j;
}

}  // namespace coq
