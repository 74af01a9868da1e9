#include "coquartic/harness/suite.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <future>
#include <memory>

#include "coquartic/error.hpp"
#include "coquartic/rng.hpp"

namespace coq {

namespace {

// Stream tags under the config seed.
enum Tag : std::uint64_t { kInverseSamples = 1, kForcedPoints, kOrbitStart, kFixedScan, kBeauvillePairs };

struct Context {
  RunConfig config;
  Tritensor tensor;
  std::unique_ptr<Triangle> tri;  // null when generation failed
  std::string setup_error;

  std::uint64_t stream(Tag tag) const { return Rng(config.seed).split(tag).seed(); }
  Real tol(long bits) const { return Real::pow2(-bits, config.precision); }
};

using CheckFn = std::function<void(const Context&, CheckResult&)>;

struct CheckSpec {
  std::string id;
  CheckKind kind;
  bool needs_tensor;
  CheckFn run;
};

Verdict pass_if(bool ok) { return ok ? Verdict::Pass : Verdict::Fail; }

void check_generation(const Context& ctx, CheckResult& r) {
  r.detail = Json{{"seed", ctx.config.seed}, {"bound", ctx.config.bound}};
  r.detail["tensor"] = tritensor_to_json(ctx.tensor)["m"];
  r.verdict = pass_if(!is_degenerate(ctx.tensor));
}

void check_adjugate(const Context& ctx, CheckResult& r) {
  bool ok = true;
  Json quartics = Json::object();
  for (int l = 0; l < 3; ++l) {
    const PolyMatrix4 m = contract(ctx.tensor, l);
    const MultiPoly det = det4(m);
    const PolyMatrix4 prod = multiply(m, adjugate4(m));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) ok = ok && prod[i][j] == (i == j ? det : MultiPoly());
    ok = ok && det == ctx.tri->surface(l).F() && det.is_homogeneous() && det.degree() == 4;
    quartics["T" + std::to_string(l)] = format_poly(det);
  }
  r.detail["quartics"] = quartics;
  r.verdict = pass_if(ok);
}

void check_certificates(const Context& ctx, CheckResult& r) {
  bool ok = true;
  Json certs = Json::array();
  std::array<int, 6> targets{};
  for (const MapCertificate& c : ctx.tri->certs) {
    certs.push_back(to_json(c));
    ok = ok && c.target != c.descriptor.source && c.quotient.is_homogeneous() && c.quotient.degree() == 8;
    targets[static_cast<std::size_t>(descriptor_slot(c.descriptor))] = c.target;
  }
  // Each surface maps to both others, one per side.
  for (int s = 0; s < 3; ++s) ok = ok && targets[2 * s] != targets[2 * s + 1];
  Json pairing = Json::object();
  for (const MapCertificate& c : ctx.tri->certs) pairing[to_string(c.descriptor)] = c.target;
  r.detail["pairing"] = pairing;
  r.detail["certificates"] = certs;
  r.verdict = ctx.tri->ambiguous ? Verdict::Ambiguous : pass_if(ok);
}

std::vector<IncidenceConstraint> forced_points(std::uint64_t seed) {
  Rng rng(seed);
  auto point = [&rng] {
    Vector4<Rational> v;
    do {
      for (int i = 0; i < 4; ++i) v[i] = rng.uniform(-3, 3);
    } while (v[0] == 0 && v[1] == 0 && v[2] == 0 && v[3] == 0);
    return RationalPoint(v);
  };
  std::vector<IncidenceConstraint> out;
  out.push_back({point(), point(), 0, Side::Right});
  out.push_back({point(), point(), 1, Side::Left});
  return out;
}

void check_inverse(const Context& ctx, CheckResult& r) {
  bool ok = true;
  double worst = 0;
  Json sampled = Json::array();
  for (const MapCertificate& c : ctx.tri->certs) {
    const InverseVerdict v = inverse_pair_check(ctx.tensor, ctx.tri->certs, c.descriptor,
                                                ctx.stream(kInverseSamples), ctx.config.precision);
    ok = ok && v.status == InverseVerdict::Status::Found;
    worst = std::max(worst, v.max_distance);
    sampled.push_back(Json{{"map", to_string(c.descriptor)},
                           {"status", to_string(v.status)},
                           {"inverse", v.inverse ? Json(to_string(*v.inverse)) : Json(nullptr)},
                           {"max_distance", v.max_distance},
                           {"points", v.points_checked}});
  }
  ok = ok && worst <= std::ldexp(1.0, -static_cast<int>(ctx.config.precision / 4));

  // Exact round trips on a tensor with two forced rational points.
  const std::vector<IncidenceConstraint> forced = forced_points(ctx.stream(kForcedPoints));
  const Tritensor t = incidence_tritensor(ctx.config.seed, forced, ctx.config.bound);
  const std::array<MapCertificate, 6> certs = certify_all(t);
  Json exact = Json::array();
  for (const IncidenceConstraint& f : forced) {
    const KernelMapDescriptor d{f.l, f.side, 0};
    const InverseVerdict v = inverse_pair_check(t, certs, d, ctx.stream(kInverseSamples), ctx.config.precision, {f.x});
    bool round = false;
    Json row{{"map", to_string(d)}, {"point", format_point(normalized(f.x))}, {"status", to_string(v.status)}};
    if (v.inverse) {
      const RationalPoint y = phi(t, d, f.x);
      const RationalPoint back = phi(t, *v.inverse, y);
      round = projectively_equal(back, f.x);
      row["image"] = format_point(normalized(y));
      row["inverse"] = to_string(*v.inverse);
      row["returned"] = format_point(normalized(back));
      row["image_is_forced_kernel"] = projectively_equal(y, f.y);
    }
    row["exact_round_trip"] = round;
    ok = ok && round;
    exact.push_back(row);
  }
  r.residual = worst;
  r.detail = Json{{"sampled", sampled}, {"forced", exact}};
  r.verdict = pass_if(ok);
}

PointMap loop_fn(const Context& ctx, Orientation o) {
  const LoopMap loop = loop_map(ctx.tri->certs, o);
  const Tritensor& t = ctx.tensor;
  return [loop, &t](const ComplexPoint& p) { return loop.apply(t, p); };
}

ComplexPoint orbit_start(const Context& ctx) {
  SampleResult s = sample_points(ctx.tri->surface(0), ctx.stream(kOrbitStart), 1, ctx.config.precision);
  if (s.points.empty()) throw Error(ErrorCode::NonConvergence, "no starting point on Sigma_0");
  return s.points.front();
}

void check_orbit(const Context& ctx, CheckResult& r) {
  const ComplexPoint p = orbit_start(ctx);
  const PointMap fwd = loop_fn(ctx, Orientation::Forward);
  const PointMap rev = loop_fn(ctx, Orientation::Reverse);
  bool ok = true;
  double worst = 0;
  for (Orientation o : {Orientation::Forward, Orientation::Reverse}) {
    const OrbitReport rep = orbit(ctx.tri->surface(0), o == Orientation::Forward ? fwd : rev, p,
                                  ctx.config.samples.orbit_steps, ctx.config.precision, ctx.tol(ctx.config.tolerance.orbit),
                                  o == Orientation::Forward ? rev : fwd);
    const double roundtrip = rep.max_roundtrip.value_or(0);
    ok = ok && rep.max_residual < std::ldexp(1.0, -static_cast<int>(ctx.config.tolerance.orbit)) &&
         roundtrip < std::ldexp(1.0, -static_cast<int>(ctx.config.tolerance.roundtrip));
    worst = std::max({worst, rep.max_residual, roundtrip});
    Json j = to_json(rep);
    j["path"] = Json::array();
    for (const KernelMapDescriptor& d : loop_map(ctx.tri->certs, o).path) j["path"].push_back(to_string(d));
    r.detail[to_string(o)] = j;
  }
  r.residual = worst;
  r.verdict = pass_if(ok);
}

void experiment_nonreturn(const Context& ctx, CheckResult& r) {
  const OrbitReport rep = orbit(ctx.tri->surface(0), loop_fn(ctx, Orientation::Forward), orbit_start(ctx),
                                ctx.config.samples.orbit_steps, ctx.config.precision, ctx.tol(ctx.config.tolerance.orbit));
  r.residual = rep.min_return_distance;
  r.detail = Json{{"steps", ctx.config.samples.orbit_steps},
                  {"min_return_distance", rep.min_return_distance ? Json(*rep.min_return_distance) : Json(nullptr)}};
  // No return within the orbit is the expected outcome for infinite order.
  r.verdict = pass_if(rep.min_return_distance && *rep.min_return_distance > 1e-6);
}

void experiment_fixed_scan(const Context& ctx, CheckResult& r) {
  const FixedPointReport rep = fixed_point_scan(ctx.tri->surface(0), loop_fn(ctx, Orientation::Forward),
                                                ctx.config.samples.fixed_scan, ctx.stream(kFixedScan), ctx.config.precision);
  r.residual = rep.min_distance;
  r.detail = to_json(rep);
  r.verdict = pass_if(rep.samples > 0 && rep.min_distance > 1e-6);
}

QuarticSurface fermat_type() {
  auto x4 = [](int i) {
    const MultiPoly x = MultiPoly::var(i);
    return x * x * x * x;
  };
  return QuarticSurface(x4(0) + x4(1) + x4(2) - x4(3), "fermat-type");
}

QuadPoint quad_point(long a, long b, long c, long d) {
  return to_quad(RationalPoint({Rational(a), Rational(b), Rational(c), Rational(d)}));
}

void check_beauville_exact(const Context&, CheckResult& r) {
  const QuarticSurface f = fermat_type();
  const PointPair<QuadExt> pair = make_point_pair(quad_point(0, 0, 1, 1), quad_point(1, 0, 0, 1));
  const InvolutionTrace<QuadExt> tr = involution_trace(f, pair);
  const QuadExt plus(Rational(1, 2), Rational(1, 2), -7);
  const QuadExt minus(Rational(1, 2), Rational(-1, 2), -7);
  const bool params = (tr.t_plus == plus && tr.t_minus == minus) || (tr.t_plus == minus && tr.t_minus == plus);
  const bool twice = pairs_equal(involution(f, tr.result), pair);
  r.detail = to_json(tr);
  r.detail["surface"] = format_poly(f.F());
  r.detail["input"] = Json::array({format_point(pair.first), format_point(pair.second)});
  r.detail["involution_twice_is_identity"] = twice;
  r.verdict = pass_if(params && twice);
}

void check_beauville_numeric(const Context& ctx, CheckResult& r) {
  const QuarticSurface& s0 = ctx.tri->surface(0);
  const std::vector<PointPair<Complex>> pairs =
      sample_pairs(s0, ctx.stream(kBeauvillePairs), ctx.config.samples.beauville_pairs, ctx.config.precision);
  double worst = 0;
  double worst_residual = 0;
  for (const PointPair<Complex>& p : pairs) {
    const PointPair<Complex> once = involution(s0, p);
    worst_residual = std::max({worst_residual, surface_residual(s0.F(), once.first).to_double(),
                               surface_residual(s0.F(), once.second).to_double()});
    worst = std::max(worst, pair_distance(involution(s0, once), p).to_double());
  }
  r.residual = worst;
  r.detail = Json{{"pairs", pairs.size()}, {"max_roundtrip", worst}, {"max_surface_residual", worst_residual}};
  r.verdict = pass_if(static_cast<int>(pairs.size()) == ctx.config.samples.beauville_pairs &&
                      worst < std::ldexp(1.0, -static_cast<int>(ctx.config.tolerance.roundtrip)) &&
                      worst_residual < surface_tolerance(ctx.config.precision).to_double());
}

void experiment_prop_og(const Context& ctx, CheckResult& r) {
  std::vector<std::uint64_t> seeds;
  for (int s = 1; s <= ctx.config.samples.og_seeds; ++s) seeds.push_back(static_cast<std::uint64_t>(s));
  const OgReport rep = prop_og_experiment(*ctx.tri, seeds, ctx.config.precision, ctx.config.samples.og_pairs);
  r.detail = to_json(rep);
  if (rep.refused) {
    r.verdict = Verdict::Ambiguous;
    return;
  }
  r.residual = rep.candidates[rep.best].max_mismatch;
  r.verdict = pass_if(rep.frames.front().consistent);
}

void check_lattice(const Context&, CheckResult& r) {
  const LatticeContext co = LatticeContext::cayley_oguiso();
  IntMatrix2 gram;
  gram.e = {{{4, 2}, {2, -4}}};
  bool ok = co.gram() == gram;
  for (long n = -10; n <= 10; ++n) {
    const LatticeElement d = dn_divisor(n, co);
    ok = ok && pair(d, d, co) == 4;
  }
  IntMatrix2 eta6;
  eta6.e = {{{5, 8}, {8, 13}}};
  ok = ok && mult_matrix(co, {5, 8}) == eta6;
  const double e = entropy(eta6).entropy.to_double();
  const double expected = std::log(9 + 4 * std::sqrt(5.0));
  ok = ok && std::abs(e - expected) < 1e-10;
  for (long a = 1; a <= 20; ++a) {
    const LatticeContext ctx(2, a);
    const LatticeEndo t = mult_matrix(ctx, {0, 1});
    ok = ok && is_isometry(t, ctx) == IsometryKind::AntiIsometry && is_isometry(t * t, ctx) == IsometryKind::Isometry;
  }
  r.residual = std::abs(e - expected);
  r.detail = Json::object();
  for (long a = 1; a <= 3; ++a) r.detail["(2," + std::to_string(a) + ")"] = lattice_report(LatticeContext(2, a));
  r.verdict = pass_if(ok);
}

void check_lee(const Context&, CheckResult& r) {
  const std::array<std::pair<long, LeeClass>, 3> expected{
      {{1, LeeClass::AntiSymplecticGenerator}, {2, LeeClass::SymplecticGenerator}, {3, LeeClass::AntiSymplecticGenerator}}};
  bool ok = true;
  for (const auto& [a, want] : expected) {
    const LeeClass got = lee_classify(2, a);
    r.detail["(2," + std::to_string(a) + ")"] = to_string(got);
    ok = ok && got == want;
  }
  r.verdict = pass_if(ok);
}

void check_rr(const Context&, CheckResult& r) {
  struct Want {
    long a;
    long degree_check;
    long h0;
  };
  bool ok = true;
  for (const Want& w : {Want{2, -24, 28}, Want{3, -20, 14}}) {
    const RrCase c = rr_case(w.a);
    const RiemannRoch rr = rr_h0(LatticeContext(2, w.a), c.gamma, c.h);
    Json j = to_json(rr);
    j["gamma"] = to_string(c.gamma);
    j["h"] = to_string(c.h);
    r.detail["a=" + std::to_string(w.a)] = j;
    ok = ok && rr.h_sq == 4 && rr.degree_check == w.degree_check && rr.h0 == w.h0 && rr.bound_ok;
  }
  r.verdict = pass_if(ok);
}

const std::vector<CheckSpec>& specs() {
  static const std::vector<CheckSpec> all{
      {"tensor_generation", CheckKind::Hard, true, check_generation},
      {"adjugate_identity", CheckKind::Hard, true, check_adjugate},
      {"divisibility_certificates", CheckKind::Hard, true, check_certificates},
      {"inverse_pairing", CheckKind::Hard, true, check_inverse},
      {"loop_orbit", CheckKind::Hard, true, check_orbit},
      {"beauville_exact", CheckKind::Hard, false, check_beauville_exact},
      {"beauville_numeric", CheckKind::Hard, true, check_beauville_numeric},
      {"lattice_numbers", CheckKind::Hard, false, check_lattice},
      {"lee_classification", CheckKind::Hard, false, check_lee},
      {"riemann_roch", CheckKind::Hard, false, check_rr},
      {"orbit_nonreturn", CheckKind::Experiment, true, experiment_nonreturn},
      {"fixed_point_scan", CheckKind::Experiment, true, experiment_fixed_scan},
      {"prop_og", CheckKind::Experiment, true, experiment_prop_og},
  };
  return all;
}

CheckResult run_one(const Context& ctx, const CheckSpec& spec) {
  CheckResult r;
  r.id = spec.id;
  r.kind = spec.kind;
  const auto start = std::chrono::steady_clock::now();
  if (spec.needs_tensor && !ctx.tri) {
    r.verdict = Verdict::Error;
    r.error = "skipped: " + ctx.setup_error;
  } else {
    try {
      spec.run(ctx, r);
    } catch (const Error& e) {
      r.verdict = Verdict::Error;
      r.error = e.what();
    }
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

const std::vector<std::string>& suite_check_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const CheckSpec& s : specs()) out.push_back(s.id);
    return out;
  }();
  return ids;
}

VerificationReport run_full_suite(const RunConfig& config) {
  config.validate();
  Context ctx;
  ctx.config = config;
  try {
    ctx.tensor = random_tritensor(config.seed, config.bound);
    ctx.tri = std::make_unique<Triangle>(Triangle::build(ctx.tensor));
  } catch (const Error& e) {
    ctx.setup_error = e.what();
  }

  VerificationReport report;
  report.config = config;
  std::vector<std::future<CheckResult>> jobs;
  for (const CheckSpec& spec : specs())
    jobs.push_back(std::async(std::launch::async, [&ctx, &spec] { return run_one(ctx, spec); }));
  for (auto& job : jobs) report.checks.push_back(job.get());
  if (!ctx.setup_error.empty()) {
    // Tensor generation itself failed; report it on the first check.
    report.checks.front().verdict = Verdict::Error;
    report.checks.front().error = ctx.setup_error;
  }
  return report;
}

}  // namespace coq
