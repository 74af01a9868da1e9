// co-quartic: command line front end. Every verb prints JSON to stdout or
// to --out.
#include <iostream>

#include "CLI11.hpp"
#include "coquartic/error.hpp"
#include "coquartic/harness/suite.hpp"

using namespace coq;

namespace {

struct Options {
  RunConfig config;
  int l = -1;
  int n = 8;
  int seeds = 5;
  bool exact = false;
  std::string surface;
  std::string pair;
  std::string orientation = "forward";
  long m = 2;
  long a = 1;
  long n_range = 10;
};

Tritensor input_tensor(const Options& o) {
  if (o.config.in_path.empty()) return random_tritensor(o.config.seed, o.config.bound);
  return parse_tritensor(o.config.in_path);
}

Orientation parse_orientation(const std::string& s) {
  return s == "reverse" ? Orientation::Reverse : Orientation::Forward;
}

int cmd_gen(const Options& o) {
  write_json(tritensor_to_json(random_tritensor(o.config.seed, o.config.bound)), o.config.out_path);
  return 0;
}

int cmd_quartics(const Options& o) {
  const Tritensor t = input_tensor(o);
  Json j = Json::object();
  for (int l = 0; l < 3; ++l)
    if (o.l < 0 || o.l == l) j["T" + std::to_string(l)] = format_poly(quartic(t, l).F());
  write_json(j, o.config.out_path);
  return 0;
}

int cmd_certify(const Options& o) {
  const Tritensor t = input_tensor(o);
  Json j = Json::array();
  for (const MapCertificate& c : certify_all(t)) j.push_back(to_json(c));
  write_json(j, o.config.out_path);
  return 0;
}

int cmd_orbit(const Options& o) {
  const Triangle tri = Triangle::build(input_tensor(o));
  const long prec = o.config.precision;
  const LoopMap fwd = loop_map(tri.certs, parse_orientation(o.orientation));
  const LoopMap back =
      loop_map(tri.certs, fwd.orientation == Orientation::Forward ? Orientation::Reverse : Orientation::Forward);
  PointMap psi = [&](const ComplexPoint& p) { return fwd.apply(tri.tensor, p); };
  PointMap inv = [&](const ComplexPoint& p) { return back.apply(tri.tensor, p); };
  const SampleResult start = sample_points(tri.surface(0), o.config.seed, 1, prec);
  if (start.points.empty()) throw Error(ErrorCode::NonConvergence, "no starting point on Sigma_0");
  const OrbitReport rep =
      orbit(tri.surface(0), psi, start.points.front(), o.n, prec, Real::pow2(-o.config.tolerance.orbit, prec), inv);
  Json j = to_json(rep);
  j["orientation"] = to_string(fwd.orientation);
  write_json(j, o.config.out_path);
  return 0;
}

int cmd_fixed_scan(const Options& o) {
  const Triangle tri = Triangle::build(input_tensor(o));
  const LoopMap loop = loop_map(tri.certs, parse_orientation(o.orientation));
  PointMap psi = [&](const ComplexPoint& p) { return loop.apply(tri.tensor, p); };
  write_json(to_json(fixed_point_scan(tri.surface(0), psi, o.config.samples.fixed_scan, o.config.seed,
                                      o.config.precision)),
             o.config.out_path);
  return 0;
}

int cmd_beauville(const Options& o) {
  const QuarticSurface s(parse_poly_file(o.surface), o.surface);
  const std::vector<RationalPoint> pts = parse_points(o.pair);
  if (pts.size() != 2) throw Error(ErrorCode::ParseError, o.pair + ": expected exactly two points");
  Json j;
  if (o.exact) {
    const PointPair<QuadExt> pair = make_point_pair(to_quad(pts[0]), to_quad(pts[1]));
    j = to_json(involution_trace(s, pair));
  } else {
    const long prec = o.config.precision;
    const PointPair<Complex> pair = make_point_pair(to_complex(pts[0], prec), to_complex(pts[1], prec));
    j = to_json(involution(s, pair));
  }
  write_json(j, o.config.out_path);
  return 0;
}

int cmd_prop_og(const Options& o) {
  const Triangle tri = Triangle::build(input_tensor(o));
  std::vector<std::uint64_t> seeds;
  for (int s = 1; s <= o.seeds; ++s) seeds.push_back(static_cast<std::uint64_t>(s));
  write_json(to_json(prop_og_experiment(tri, seeds, o.config.precision, o.config.samples.og_pairs)),
             o.config.out_path);
  return 0;
}

int cmd_lattice(const Options& o) {
  write_json(lattice_report(LatticeContext(o.m, o.a), o.n_range), o.config.out_path);
  return 0;
}

int cmd_lee(const Options& o) {
  write_json(Json{{"m", o.m}, {"a", o.a}, {"classification", to_string(lee_classify(o.m, o.a))}}, o.config.out_path);
  return 0;
}

int cmd_rr(const Options& o) {
  const RrCase c = rr_case(o.a);
  Json j = to_json(rr_h0(LatticeContext(2, o.a), c.gamma, c.h));
  j["a"] = o.a;
  j["gamma"] = to_string(c.gamma);
  j["h"] = to_string(c.h);
  write_json(j, o.config.out_path);
  return 0;
}

int cmd_suite(const Options& o) {
  const VerificationReport rep = run_full_suite(o.config);
  write_json(rep.to_json(), o.config.out_path);
  for (const CheckResult& c : rep.checks)
    std::cerr << to_string(c.kind) << " " << c.id << ": " << to_string(c.verdict)
              << (c.error.empty() ? "" : " (" + c.error + ")") << "\n";
  return rep.exit_status();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cayley-Oguiso quartic toolkit"};
  app.require_subcommand(1);
  Options o;

  auto common = [&o](CLI::App* sub) {
    sub->add_option("--seed", o.config.seed, "Root seed")->capture_default_str();
    sub->add_option("--precision", o.config.precision, "Working precision in bits")->capture_default_str();
    sub->add_option("--bound", o.config.bound, "Tensor entry bound")->capture_default_str();
    sub->add_option("--in", o.config.in_path, "Input tensor JSON (default: generated from --seed)");
    sub->add_option("--out", o.config.out_path, "Output path (default: stdout)");
  };

  std::map<CLI::App*, std::function<int(const Options&)>> verbs;
  auto verb = [&](const std::string& name, const std::string& help, std::function<int(const Options&)> fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    common(sub);
    verbs[sub] = std::move(fn);
    return sub;
  };

  verb("gen", "Generate a random tritensor", cmd_gen);
  verb("quartics", "Print the three determinantal quartics", cmd_quartics)
      ->add_option("--l", o.l, "Only this quartic (0, 1 or 2)")
      ->check(CLI::Range(0, 2));
  verb("certify", "Divisibility certificates for the six kernel maps", cmd_certify);
  CLI::App* orb = verb("orbit", "Orbit of a sampled point under the loop map", cmd_orbit);
  orb->add_option("--n,--samples", o.n, "Number of steps")->capture_default_str();
  orb->add_option("--orientation", o.orientation, "forward or reverse")
      ->check(CLI::IsMember({"forward", "reverse"}));
  orb->add_option("--tolerance-bits", o.config.tolerance.orbit, "Residual bound 2^-bits")->capture_default_str();
  CLI::App* fs = verb("fixed-scan", "Closest approach of the loop map to a fixed point", cmd_fixed_scan);
  fs->add_option("--samples", o.config.samples.fixed_scan, "Sampled points")->capture_default_str();
  fs->add_option("--orientation", o.orientation, "forward or reverse")->check(CLI::IsMember({"forward", "reverse"}));
  CLI::App* bv = verb("beauville", "Residual pair of the line through two points", cmd_beauville);
  bv->add_option("--surface", o.surface, "Quartic polynomial text file")->required();
  bv->add_option("--pair", o.pair, "JSON file with two points")->required();
  bv->add_flag("--exact", o.exact, "Exact arithmetic over a quadratic field");
  CLI::App* og = verb("prop-og", "Compare the loop map with composed involutions", cmd_prop_og);
  og->add_option("--seeds", o.seeds, "Sampling seeds 1..N")->capture_default_str();
  og->add_option("--samples", o.config.samples.og_pairs, "Pairs per seed")->capture_default_str();
  CLI::App* lr = verb("lattice-report", "Neron-Severi lattice report", cmd_lattice);
  lr->add_option("--m", o.m)->capture_default_str();
  lr->add_option("--a", o.a)->capture_default_str();
  lr->add_option("--n-range", o.n_range, "D_n table for |n| <= N")->capture_default_str();
  CLI::App* lee = verb("lee-classify", "Generator type of the automorphism group", cmd_lee);
  lee->add_option("--m", o.m)->required();
  lee->add_option("--a", o.a)->required();
  verb("rr-check", "Riemann-Roch count for a = 2 or 3", cmd_rr)->add_option("--a", o.a)->required();
  CLI::App* su = verb("suite", "Run every check and write a verification report", cmd_suite);
  su->add_option("--samples", o.config.samples.beauville_pairs, "Beauville pairs")->capture_default_str();
  su->add_option("--og-seeds", o.config.samples.og_seeds, "Sampling seeds for prop-og")->capture_default_str();

  CLI11_PARSE(app, argc, argv);
  for (auto& [sub, fn] : verbs) {
    if (!sub->parsed()) continue;
    o.config.command = sub->get_name();
    try {
      o.config.validate();
      return fn(o);
    } catch (const Error& e) {
      std::cerr << "co-quartic: " << e.what() << "\n";
      return e.code() == ErrorCode::ParseError ? 2 : 1;
    }
  }
  return 1;
}
