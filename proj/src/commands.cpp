#include "qwzeta/commands.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <functional>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "qwzeta/cycle_zeta.hpp"
#include "qwzeta/errors.hpp"
#include "qwzeta/graph_file.hpp"
#include "qwzeta/verification.hpp"
#include "qwzeta/zeta_finite.hpp"
#include "qwzeta/zeta_periodic.hpp"

namespace qwzeta {

namespace {

using json = nlohmann::json;

// Flag combinations that make no sense for the chosen walk.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt12(double x) {
  if (x == 0.0) x = 0.0;  // no "-0"
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string fmt_sci(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

json to_json(const Complex& z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json to_json(const std::vector<Complex>& zs) {
  json out = json::array();
  for (const auto& z : zs) out.push_back(to_json(z));
  return out;
}

// Text output: parts below 12 significant digits of the largest coefficient
// print as 0.
std::vector<Complex> rounded(const std::vector<Complex>& cs) {
  double scale = 0.0;
  for (const auto& c : cs) scale = std::max(scale, std::abs(c));
  auto snap = [&](double x) { return std::abs(x) < 1e-12 * scale ? 0.0 : x; };
  std::vector<Complex> out;
  for (const auto& c : cs) out.emplace_back(snap(c.real()), snap(c.imag()));
  return out;
}

void print_coefficients(std::ostream& out, const std::vector<Complex>& raw) {
  const auto cs = rounded(raw);
  for (std::size_t k = 0; k < cs.size(); ++k) {
    out << "  u^" << k << "  " << fmt12(cs[k].real()) << "  " << fmt12(cs[k].imag()) << "\n";
  }
}

struct WalkFlags {
  std::string walk = "sc";
  std::string coin = "grover";
  std::string a1 = "1,0", b1 = "-1,0", a2 = "1,0", b2 = "-1,0";
  std::uint64_t seed = 1;
  int p = 0, q = 0;
  bool allow_nonunitary = false;
  CLI::Option* a2_opt = nullptr;
  CLI::Option* b2_opt = nullptr;
  CLI::Option* p_opt = nullptr;
  CLI::Option* q_opt = nullptr;
};

void add_walk_flags(CLI::App* cmd, WalkFlags& f) {
  cmd->add_option("--walk", f.walk, "Walk kind: sc (U = S C) or cc (U = C1 C2)")
      ->check(CLI::IsMember({"sc", "cc"}))
      ->capture_default_str();
  cmd->add_option("--coin", f.coin, "grover (vertex Grover isometries) or custom (seeded random isometries)")
      ->check(CLI::IsMember({"grover", "custom"}))
      ->capture_default_str();
  cmd->add_option("--a1", f.a1, "First coin eigenvalue a1 as re,im")->capture_default_str();
  cmd->add_option("--b1", f.b1, "First coin eigenvalue b1 as re,im")->capture_default_str();
  f.a2_opt = cmd->add_option("--a2", f.a2, "Second coin eigenvalue a2 as re,im (cc only)")->capture_default_str();
  f.b2_opt = cmd->add_option("--b2", f.b2, "Second coin eigenvalue b2 as re,im (cc only)")->capture_default_str();
  cmd->add_option("--seed", f.seed, "Seed for custom isometries")->capture_default_str();
  f.p_opt = cmd->add_option("--p", f.p, "Rank of the first custom isometry (default n)");
  f.q_opt = cmd->add_option("--q", f.q, "Rank of the second custom isometry, cc only (default n)");
  cmd->add_flag("--allow-nonunitary", f.allow_nonunitary, "Accept coin eigenvalues off the unit circle");
}

void check_coherence(const WalkFlags& f, bool periodic) {
  if (f.walk == "sc" && (f.a2_opt->count() || f.b2_opt->count() || f.q_opt->count())) {
    throw UsageError("--a2, --b2 and --q describe the second coin and need --walk cc");
  }
  if (f.coin == "grover" && (f.p_opt->count() || f.q_opt->count())) {
    throw UsageError("--p and --q set custom isometry ranks and need --coin custom");
  }
  if (periodic && f.coin != "grover") throw UsageError("periodic walks are built from Grover isometries only");
}

CoinParams first_coin(const WalkFlags& f) { return {parse_complex(f.a1), parse_complex(f.b1)}; }
CoinParams second_coin(const WalkFlags& f) { return {parse_complex(f.a2), parse_complex(f.b2)}; }

WalkSpec build_walk(const Graph& g, const WalkFlags& f) {
  check_coherence(f, false);
  const bool strict = !f.allow_nonunitary;
  const int n = g.num_vertices();
  auto custom = [&](int rank, int slot) { return random_isometry(rank > 0 ? rank : n, g, instance_seed(f.seed, slot)); };
  if (f.walk == "sc") {
    Isometry d = f.coin == "grover" ? origin_grover_isometry(g) : custom(f.p, 0);
    return WalkSpec::shift_coin(std::move(d), first_coin(f), strict);
  }
  Isometry d1 = f.coin == "grover" ? origin_grover_isometry(g) : custom(f.p, 0);
  Isometry d2 = f.coin == "grover" ? terminal_grover_isometry(g) : custom(f.q, 1);
  return WalkSpec::two_coin(std::move(d1), first_coin(f), std::move(d2), second_coin(f), strict);
}

Graph finite_graph(const std::string& path) {
  const GraphFile file = read_graph_file(path);
  if (file.dim() != 0) throw Error(ErrorKind::kDimensionMismatch, path + ": this command needs a dim = 0 graph");
  return file.graph();
}

std::vector<std::string> factored_anchors(const ZetaResult& r) {
  std::vector<std::string> out;
  if (r.method == ZetaMethod::kShiftCoinFactored) {
    out.push_back("det(I-uSC) = (1-b^2u^2)^(m-q) det((1-abu^2)I_q - cu dSd*)");
  } else {
    out.push_back("det(I-uC1C2) = (1-b1b2u)^(2m-p-q) (1-a2b1u)^(q-p) det((1-a1b2u)(1-a2b1u)I_p - c1c2u K)");
  }
  if (r.factors && !r.factors->note.empty()) out.push_back(r.factors->note);
  return out;
}

// ---- zeta -----------------------------------------------------------------

struct ZetaArgs {
  std::string graph;
  WalkFlags walk;
  std::string method = "direct";
  std::string format = "text";
  double tolerance = 1e-8;
  bool strict_swap = false;
};

int cmd_zeta(const ZetaArgs& args, std::ostream& out) {
  const Graph g = finite_graph(args.graph);
  const WalkSpec spec = build_walk(g, args.walk);
  const SwapPolicy policy = args.strict_swap ? SwapPolicy::kStrict : SwapPolicy::kAutoSwap;

  std::optional<ZetaResult> direct, factored;
  if (args.method != "factored") direct = zeta_reciprocal_direct(evolution(g, spec));
  if (args.method != "direct") factored = zeta_reciprocal_factored(g, spec, policy);

  std::vector<std::string> anchors;
  if (direct) anchors.push_back("det(I-uU) from the characteristic polynomial of U");
  if (factored) {
    for (auto& a : factored_anchors(*factored)) anchors.push_back(std::move(a));
  }
  std::optional<double> deviation;
  if (direct && factored) deviation = max_coeff_deviation(direct->reciprocal, factored->reciprocal);
  const ZetaResult& primary = factored ? *factored : *direct;
  const std::string method = direct && factored ? "both" : std::string(to_string(primary.method));

  if (args.format == "json") {
    json doc;
    doc["coefficients"] = to_json(primary.reciprocal.coefficients());
    doc["method"] = method;
    if (deviation) doc["deviation"] = *deviation;
    doc["anchors"] = anchors;
    out << doc.dump(2) << "\n";
  } else if (args.format == "csv") {
    if (deviation) {
      out << "power,direct_re,direct_im,factored_re,factored_im,deviation\n";
      const int deg = std::max(direct->reciprocal.degree(), factored->reciprocal.degree());
      std::vector<Complex> xs, ys;
      for (int k = 0; k <= deg; ++k) {
        xs.push_back(direct->reciprocal.coeff(k));
        ys.push_back(factored->reciprocal.coeff(k));
      }
      const auto xr = rounded(xs), yr = rounded(ys);
      for (int k = 0; k <= deg; ++k) {
        out << k << "," << fmt12(xr[k].real()) << "," << fmt12(xr[k].imag()) << "," << fmt12(yr[k].real()) << ","
            << fmt12(yr[k].imag()) << "," << fmt_sci(std::abs(xs[k] - ys[k])) << "\n";
      }
    } else {
      out << "power,re,im\n";
      const auto cs = rounded(primary.reciprocal.coefficients());
      for (std::size_t k = 0; k < cs.size(); ++k) {
        out << k << "," << fmt12(cs[k].real()) << "," << fmt12(cs[k].imag()) << "\n";
      }
    }
  } else {
    out << "method: " << method << "\n";
    for (const auto& a : anchors) out << "anchor: " << a << "\n";
    if (direct) {
      out << "coefficients (direct):\n";
      print_coefficients(out, direct->reciprocal.coefficients());
    }
    if (factored) {
      out << "coefficients (factored):\n";
      print_coefficients(out, factored->reciprocal.coefficients());
    }
    if (deviation) out << "deviation: " << fmt_sci(*deviation) << " (tolerance " << fmt_sci(args.tolerance) << ")\n";
  }
  return deviation && *deviation > args.tolerance ? kExitVerificationFailure : kExitSuccess;
}

// ---- spectrum -------------------------------------------------------------

struct SpectrumArgs {
  std::string graph;
  WalkFlags walk;
  bool compare = false;
  std::string format = "text";
  double tolerance = 1e-7;
};

int cmd_spectrum(const SpectrumArgs& args, std::ostream& out) {
  const Graph g = finite_graph(args.graph);
  const WalkSpec spec = build_walk(g, args.walk);
  const WalkSpec cc = spec.kind == WalkKind::kShiftCoin ? spec.as_two_coin(g) : spec;
  const SpectrumReport rep = spectrum_two_coin(g, cc.d1, *cc.d2, cc.p1, cc.p2);

  struct Group {
    Complex lambda;
    SpectralClass cls;
    int multiplicity;
  };
  std::vector<Group> groups;
  for (const auto& v : rep.values) {
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const Group& gr) { return gr.cls == v.cls && std::abs(gr.lambda - v.lambda) < 1e-9; });
    if (it == groups.end()) {
      groups.push_back({v.lambda, v.cls, 1});
    } else {
      ++it->multiplicity;
    }
  }
  std::optional<double> distance;
  if (args.compare) distance = match_multisets(eigenvalues(evolution(g, spec)), rep.lambdas()).max_distance;
  const int two_m = 2 * g.num_edges();

  if (args.format == "json") {
    json doc;
    json values = json::array();
    for (const auto& gr : groups) {
      values.push_back({{"re", gr.lambda.real()},
                        {"im", gr.lambda.imag()},
                        {"class", std::string(to_string(gr.cls))},
                        {"multiplicity", gr.multiplicity}});
    }
    doc["eigenvalues"] = values;
    doc["counts"] = {{"quadratic", rep.quadratic_count},
                     {"b1a2", rep.b1a2_count},
                     {"b1b2", rep.b1b2_count},
                     {"arcs", two_m}};
    doc["swapped"] = rep.swapped;
    if (distance) doc["pairing_distance"] = *distance;
    out << doc.dump(2) << "\n";
  } else {
    out << "counts: quadratic=" << rep.quadratic_count << " b1a2=" << rep.b1a2_count << " b1b2=" << rep.b1b2_count
        << " total=" << rep.quadratic_count + rep.b1a2_count + rep.b1b2_count << " (2m=" << two_m << ")\n";
    if (rep.swapped) out << "note: coins exchanged so that p <= q\n";
    out << "re  im  modulus  class  multiplicity\n";
    for (const auto& gr : groups) {
      out << fmt12(gr.lambda.real()) << "  " << fmt12(gr.lambda.imag()) << "  " << fmt12(std::abs(gr.lambda)) << "  "
          << to_string(gr.cls) << "  " << gr.multiplicity << "\n";
    }
    if (distance) {
      out << "max pairing distance: " << fmt_sci(*distance) << " (tolerance " << fmt_sci(args.tolerance) << ")\n";
    }
  }
  return distance && *distance > args.tolerance ? kExitVerificationFailure : kExitSuccess;
}

// ---- ihara ----------------------------------------------------------------

struct IharaArgs {
  std::string graph;
  std::string method = "all";
  int order = 12;
  std::string format = "text";
  double tolerance = 1e-9;
};

int cmd_ihara(const IharaArgs& args, std::ostream& out) {
  const Graph g = finite_graph(args.graph);
  const bool all = args.method == "all";
  std::optional<ComplexPolynomial> bass, edge;
  std::optional<ComplexSeries> euler;
  if (all || args.method == "bass") bass = ihara_bass(g);
  if (all || args.method == "edge" || args.method == "euler") edge = ihara_edge(g);
  if (all || args.method == "euler") euler = euler_product_series(prime_cycles(g, args.order), args.order);

  std::optional<double> bass_vs_edge, euler_vs_det;
  if (bass && edge) bass_vs_edge = max_coeff_deviation(*bass, *edge);
  if (euler) euler_vs_det = max_coeff_deviation(*euler, ComplexSeries::from_polynomial(*edge, args.order).reciprocal());
  const bool fail = (bass_vs_edge && *bass_vs_edge > args.tolerance) || (euler_vs_det && *euler_vs_det > args.tolerance);

  if (args.format == "json") {
    json doc;
    doc["method"] = args.method;
    if (bass) doc["bass"] = to_json(bass->coefficients());
    if (edge && args.method != "euler") doc["edge"] = to_json(edge->coefficients());
    if (euler) {
      doc["euler_series"] = to_json(euler->coefficients());
      doc["order"] = args.order;
    }
    if (bass_vs_edge) doc["bass_vs_edge"] = *bass_vs_edge;
    if (euler_vs_det) doc["euler_vs_determinant"] = *euler_vs_det;
    out << doc.dump(2) << "\n";
  } else {
    if (bass) {
      out << "reciprocal zeta (vertex determinant):\n";
      print_coefficients(out, bass->coefficients());
    }
    if (edge && args.method != "euler") {
      out << "reciprocal zeta (edge determinant):\n";
      print_coefficients(out, edge->coefficients());
    }
    if (bass_vs_edge) out << "vertex vs edge deviation: " << fmt_sci(*bass_vs_edge) << "\n";
    if (euler) {
      out << "zeta from the Euler product through u^" << args.order << ":\n";
      print_coefficients(out, euler->coefficients());
      out << "Euler product vs 1/det(I-uB) deviation: " << fmt_sci(*euler_vs_det) << "\n";
    }
  }
  return fail ? kExitVerificationFailure : kExitSuccess;
}

// ---- periodic -------------------------------------------------------------

struct PeriodicArgs {
  std::string graph;
  WalkFlags walk;
  std::string u = "0.1,0";
  int grid = kDefaultGrid;
  double u_max = kDefaultUMax;
  std::optional<double> quadrature_tolerance;
  bool check_theorem = false;
  bool ihara = false;
  std::string format = "text";
  double tolerance = 1e-6;
  int threads = 0;
};

int cmd_periodic(const PeriodicArgs& args, std::ostream& out) {
  check_coherence(args.walk, true);
  const GraphFile file = read_graph_file(args.graph);
  if (file.dim() < 1) throw Error(ErrorKind::kDimensionMismatch, args.graph + ": periodic needs dim >= 1");
  const CrystalGraph& cg = file.crystal;

  PeriodicWalkSpec spec;
  spec.kind = args.walk.walk == "sc" ? WalkKind::kShiftCoin : WalkKind::kTwoCoin;
  spec.p1 = first_coin(args.walk);
  spec.p2 = second_coin(args.walk);
  spec.strict_unitary = !args.walk.allow_nonunitary;
  const Complex u = parse_complex(args.u);
  GammaDetOptions options;
  options.tolerance = args.quadrature_tolerance;
  options.threads = args.threads;

  const auto direct = zeta_periodic_direct(cg, spec, u, args.grid, args.u_max, options);
  std::optional<PeriodicFactoredResult> factored;
  std::optional<double> deviation;
  if (args.check_theorem) {
    factored = zeta_periodic_factored(cg, spec, u, args.grid, args.u_max, options);
    deviation = std::abs(factored->reciprocal - direct.reciprocal);
  }
  std::optional<PeriodicIharaResult> ihara;
  if (args.ihara) ihara = ihara_periodic(cg, u, args.grid, options);
  const bool fail = deviation && *deviation > args.tolerance;

  if (args.format == "json") {
    json doc;
    doc["u"] = to_json(u);
    doc["grid"] = args.grid;
    doc["reciprocal"] = to_json(direct.reciprocal);
    doc["zeta"] = to_json(direct.zeta);
    doc["error_estimate"] = direct.det.error_estimate;
    doc["branch_certificate"] = direct.det.certificate;
    doc["unit_disc_certified"] = direct.det.unit_disc_certified;
    if (factored) {
      doc["factored_reciprocal"] = to_json(factored->reciprocal);
      doc["exponent"] = factored->exponent;
      doc["deviation"] = *deviation;
      doc["anchors"] = {"det_G(I-uU) = (1+b2u)^(TrI_R-2TrI_V) det_G((1+a2u)(1-b2u)I_V - 2c2u d2d1*d1d2*)"};
    }
    if (ihara) {
      doc["ihara_edge_excess_form"] = to_json(ihara->zeta_from_edge_excess);
      doc["ihara_euler_characteristic_form"] = to_json(ihara->zeta_from_euler_char);
      doc["euler_characteristic"] = ihara->euler_characteristic;
    }
    out << doc.dump(2) << "\n";
  } else {
    out << "u: " << fmt12(u.real()) << " " << fmt12(u.imag()) << "  grid: " << args.grid << "\n";
    out << "det_G(I-uU): " << fmt12(direct.reciprocal.real()) << " " << fmt12(direct.reciprocal.imag()) << "\n";
    out << "zeta: " << fmt12(direct.zeta.real()) << " " << fmt12(direct.zeta.imag()) << "\n";
    out << "quadrature error estimate: " << fmt_sci(direct.det.error_estimate) << "\n";
    out << "branch certificate (min Re of fiber eigenvalues): " << fmt12(direct.det.certificate) << "\n";
    out << "fiber spectra inside |z-1| < 1: " << (direct.det.unit_disc_certified ? "yes" : "no") << "\n";
    if (factored) {
      out << "factored: " << fmt12(factored->reciprocal.real()) << " " << fmt12(factored->reciprocal.imag())
          << "  (exponent " << factored->exponent << ")\n";
      out << "deviation: " << fmt_sci(*deviation) << " (tolerance " << fmt_sci(args.tolerance) << ") "
          << (fail ? "FAIL" : "PASS") << "\n";
    }
    if (ihara) {
      out << "ihara zeta (edge-excess form): " << fmt12(ihara->zeta_from_edge_excess.real()) << " "
          << fmt12(ihara->zeta_from_edge_excess.imag()) << "\n";
      out << "ihara zeta (Euler-characteristic form): " << fmt12(ihara->zeta_from_euler_char.real()) << " "
          << fmt12(ihara->zeta_from_euler_char.imag()) << "  (chi = " << fmt12(ihara->euler_characteristic) << ")\n";
    }
  }
  return fail ? kExitVerificationFailure : kExitSuccess;
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::string suite = "all";
  VerifyOptions options;
  bool timing = false;
};

int cmd_verify(VerifyArgs args, std::ostream& out) {
  args.options.suite = args.suite == "finite" ? Suite::kFinite : args.suite == "periodic" ? Suite::kPeriodic : Suite::kAll;
  const VerifyReport report = run_verification(args.options);
  out << format_report(report, args.timing);
  return report.all_pass() ? kExitSuccess : kExitVerificationFailure;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zeta functions of finite and periodic graphs from quantum-walk evolution matrices", "qwzeta"};
  app.require_subcommand(1);

  std::function<int()> action;
  CLI::App* active = nullptr;
  auto bind = [&](CLI::App* cmd, std::function<int()> fn) {
    cmd->callback([&, cmd, fn] {
      active = cmd;
      action = fn;
    });
  };

  ZetaArgs zeta;
  auto* zc = app.add_subcommand("zeta", "Reciprocal zeta polynomial det(I - uU) of a walk");
  zc->add_option("--graph", zeta.graph, "Graph file (dim = 0)")->required();
  add_walk_flags(zc, zeta.walk);
  zc->add_option("--method", zeta.method, "direct, factored or both")
      ->check(CLI::IsMember({"direct", "factored", "both"}))
      ->capture_default_str();
  zc->add_option("--format", zeta.format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  zc->add_option("--tolerance", zeta.tolerance, "Coefficient tolerance for --method both")->capture_default_str();
  zc->add_flag("--strict-swap", zeta.strict_swap, "Refuse two-coin walks with q < p instead of exchanging the coins");
  bind(zc, [&] { return cmd_zeta(zeta, out); });

  SpectrumArgs spectrum;
  auto* sc = app.add_subcommand("spectrum", "Closed-form eigenvalues of the walk with their origin");
  sc->add_option("--graph", spectrum.graph, "Graph file (dim = 0)")->required();
  add_walk_flags(sc, spectrum.walk);
  sc->add_flag("--compare", spectrum.compare, "Pair against a dense eigensolver");
  sc->add_option("--format", spectrum.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  sc->add_option("--tolerance", spectrum.tolerance, "Pairing tolerance for --compare")->capture_default_str();
  bind(sc, [&] { return cmd_spectrum(spectrum, out); });

  IharaArgs ihara;
  auto* ic = app.add_subcommand("ihara", "Ihara zeta by vertex determinant, edge determinant and Euler product");
  ic->add_option("--graph", ihara.graph, "Graph file (dim = 0)")->required();
  ic->add_option("--method", ihara.method, "bass, edge, euler or all")
      ->check(CLI::IsMember({"bass", "edge", "euler", "all"}))
      ->capture_default_str();
  ic->add_option("--order", ihara.order, "Series order for the Euler product")
      ->check(CLI::Range(1, kDefaultCycleLengthCap))
      ->capture_default_str();
  ic->add_option("--format", ihara.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  ic->add_option("--tolerance", ihara.tolerance, "Agreement tolerance")->capture_default_str();
  bind(ic, [&] { return cmd_ihara(ihara, out); });

  PeriodicArgs periodic;
  auto* pc = app.add_subcommand("periodic", "Zeta of a walk on a periodic graph at a point u");
  pc->add_option("--graph", periodic.graph, "Graph file (dim >= 1)")->required();
  add_walk_flags(pc, periodic.walk);
  pc->add_option("--u", periodic.u, "Point u as re,im")->capture_default_str();
  pc->add_option("--grid", periodic.grid, "Quadrature points per dimension")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  pc->add_option("--u-max", periodic.u_max, "Largest admissible |u|")->capture_default_str();
  pc->add_option("--quadrature-tolerance", periodic.quadrature_tolerance,
                 "Fail when the quadrature error estimate exceeds this");
  pc->add_flag("--check-theorem", periodic.check_theorem, "Compare with the factored vertex-pencil form");
  pc->add_flag("--ihara", periodic.ihara, "Also evaluate the periodic Ihara zeta");
  pc->add_option("--format", periodic.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  pc->add_option("--tolerance", periodic.tolerance, "Tolerance for --check-theorem")->capture_default_str();
  pc->add_option("--threads", periodic.threads, "Worker threads (0: QWZETA_THREADS or all cores)");
  bind(pc, [&] { return cmd_periodic(periodic, out); });

  VerifyArgs verify;
  auto* vc = app.add_subcommand("verify", "Randomized verification of every identity");
  vc->add_option("--suite", verify.suite, "finite, periodic or all")
      ->check(CLI::IsMember({"finite", "periodic", "all"}))
      ->capture_default_str();
  vc->add_option("--instances", verify.options.instances, "Random finite instances")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  vc->add_option("--seed", verify.options.seed, "Base seed")->capture_default_str();
  vc->add_option("--nmax", verify.options.nmax, "Largest vertex count")->check(CLI::Range(2, 8))->capture_default_str();
  vc->add_option("--grid", verify.options.grid, "Periodic quadrature points per dimension")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  vc->add_option("--threads", verify.options.threads, "Worker threads (0: QWZETA_THREADS or all cores)");
  vc->add_flag("--timing", verify.timing, "Append per-check wall time (output is then not reproducible)");
  bind(vc, [&] { return cmd_verify(verify, out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitSuccess : kExitRuntimeError;
  }
  try {
    return action();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << active->help();
    return kExitRuntimeError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntimeError;
  }
}

}  // namespace qwzeta
