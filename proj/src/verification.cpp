#include "qwzeta/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <set>

#include "qwzeta/cycle_zeta.hpp"
#include "qwzeta/errors.hpp"
#include "qwzeta/parallel.hpp"
#include "qwzeta/zeta_finite.hpp"

namespace qwzeta {

namespace {

constexpr double kCoefficientTol = 1e-8;
constexpr double kPairingTol = 1e-7;
constexpr double kUnitarityTol = 1e-10;
constexpr double kModulusTol = 1e-9;
constexpr double kIharaTol = 1e-9;
constexpr double kPeriodicTol = 1e-6;
constexpr double kDegenerationTol = 1e-9;
constexpr int kEulerOrder = 12;
constexpr int kLogOrder = 10;

CheckRecord run_check(std::string identity, std::string anchor, int instance, std::string subject, double tolerance,
                      const std::function<double()>& body) {
  CheckRecord rec{std::move(identity), std::move(anchor), instance, std::move(subject), 0.0, tolerance, false, 0.0, {}};
  const auto start = std::chrono::steady_clock::now();
  try {
    rec.deviation = body();
    rec.pass = rec.deviation <= tolerance;
  } catch (const std::exception& e) {
    rec.deviation = std::numeric_limits<double>::infinity();
    rec.detail = e.what();
  }
  rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

double max_modulus_defect(const std::vector<Complex>& values) {
  double out = 0.0;
  for (const auto& z : values) out = std::max(out, std::abs(std::abs(z) - 1.0));
  return out;
}

std::string describe(const Graph& g) {
  return "n=" + std::to_string(g.num_vertices()) + " m=" + std::to_string(g.num_edges());
}

std::string describe(const Complex& z) {
  char buf[64];
  if (z.imag() == 0.0) {
    std::snprintf(buf, sizeof buf, "%g", z.real());
  } else if (z.real() == 0.0) {
    std::snprintf(buf, sizeof buf, "%gi", z.imag());
  } else {
    std::snprintf(buf, sizeof buf, "%g%+gi", z.real(), z.imag());
  }
  return buf;
}

// sum_{d | l} d * (number of prime cycles of length d)
std::int64_t divisor_sum(const PrimeCycleTable& table, int l) {
  std::int64_t out = 0;
  for (int d = 1; d <= l; ++d) {
    if (l % d == 0) out += d * table.counts[d];
  }
  return out;
}

}  // namespace

Graph random_connected_graph(std::mt19937_64& rng, int nmax, int max_edges) {
  if (nmax < 2) throw Error(ErrorKind::kInvalidParameter, "nmax must be at least 2");
  const int n = std::uniform_int_distribution<int>(2, nmax)(rng);
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::shuffle(order.begin(), order.end(), rng);

  std::set<std::pair<int, int>> present;
  std::vector<Edge> edges;
  auto add = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    if (present.insert({a, b}).second) edges.emplace_back(a, b);
  };
  for (int k = 1; k < n; ++k) {
    const int parent = std::uniform_int_distribution<int>(0, k - 1)(rng);
    add(order[k], order[parent]);
  }
  const int complete = n * (n - 1) / 2;
  const int target_max = std::max(n - 1, std::min(complete, max_edges));
  const int target = std::uniform_int_distribution<int>(n - 1, target_max)(rng);
  std::vector<std::pair<int, int>> missing;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (!present.count({a, b})) missing.emplace_back(a, b);
    }
  }
  std::shuffle(missing.begin(), missing.end(), rng);
  for (int k = 0; static_cast<int>(edges.size()) < target; ++k) add(missing[k].first, missing[k].second);
  return build_graph(n, edges);
}

CoinParams random_unit_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  const double alpha = angle(rng);
  const double beta = angle(rng);
  return {std::polar(1.0, alpha), std::polar(1.0, beta)};
}

Isometry random_vertex_isometry(std::mt19937_64& rng, const Graph& g) {
  switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
    case 0: return origin_grover_isometry(g);
    case 1: return terminal_grover_isometry(g);
    default: {
      const int rows = std::uniform_int_distribution<int>(1, g.num_vertices())(rng);
      return random_isometry(rows, g, rng());
    }
  }
}

std::uint64_t instance_seed(std::uint64_t seed, int index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

bool VerifyReport::all_pass() const { return failures() == 0; }

int VerifyReport::failures() const {
  return static_cast<int>(std::count_if(records.begin(), records.end(), [](const auto& r) { return !r.pass; }));
}

std::vector<CheckRecord> finite_instance_checks(std::uint64_t seed, int index, int nmax) {
  std::mt19937_64 rng(instance_seed(seed, index));
  const Graph g = random_connected_graph(rng, nmax);
  const int m = g.num_edges();

  const Isometry d1 = random_vertex_isometry(rng, g);
  const Isometry d2 = random_vertex_isometry(rng, g);
  const CoinParams p1 = random_unit_params(rng);
  const CoinParams p2 = random_unit_params(rng);
  const Isometry dsc = random_vertex_isometry(rng, g);
  const CoinParams psc = random_unit_params(rng);

  const std::string cc_subject = describe(g) + " p=" + std::to_string(d1.rows()) + "(" +
                                 std::string(to_string(d1.label())) + ") q=" + std::to_string(d2.rows()) + "(" +
                                 std::string(to_string(d2.label())) + ")";
  const std::string sc_subject =
      describe(g) + " q=" + std::to_string(dsc.rows()) + "(" + std::string(to_string(dsc.label())) + ")";

  const WalkSpec cc = WalkSpec::two_coin(d1, p1, d2, p2);
  const WalkSpec sc = WalkSpec::shift_coin(dsc, psc);
  const CMatrix ucc = evolution(g, cc);
  const CMatrix usc = evolution(g, sc);

  std::vector<CheckRecord> out;
  auto add = [&](std::string id, std::string anchor, const std::string& subject, double tol,
                 const std::function<double()>& body) {
    out.push_back(run_check(std::move(id), std::move(anchor), index, subject, tol, body));
  };

  add("two_coin_factorization", "det(I-uC1C2) = (1-b1b2u)^(2m-p-q) (1-a2b1u)^(q-p) det(pencil)", cc_subject,
      kCoefficientTol, [&] {
        return max_coeff_deviation(zeta_reciprocal_direct(ucc).reciprocal,
                                   zeta_reciprocal_two_coin(g, d1, d2, p1, p2).reciprocal);
      });
  add("two_coin_char_poly", "det(lI-C1C2) factored", cc_subject, kCoefficientTol,
      [&] { return max_coeff_deviation(char_poly(ucc), char_poly_two_coin(g, d1, d2, p1, p2)); });
  add("two_coin_spectrum", "roots of l^2-(a1b2+a2b1+c1c2mu)l+a1a2b1b2", cc_subject, kPairingTol, [&] {
    return match_multisets(eigenvalues(ucc), spectrum_two_coin(g, d1, d2, p1, p2).lambdas()).max_distance;
  });
  add("spectrum_multiplicity", "2p + (q-p) + (2m-p-q) = 2m", cc_subject, 0.0, [&] {
    const SpectrumReport rep = spectrum_two_coin(g, d1, d2, p1, p2);
    const int total = rep.quadratic_count + rep.b1a2_count + rep.b1b2_count;
    return static_cast<double>(std::abs(total - 2 * m) + std::abs(static_cast<int>(rep.values.size()) - 2 * m));
  });
  add("two_coin_unitarity", "U*U = I", cc_subject, kUnitarityTol, [&] { return unitarity_defect(ucc); });
  add("two_coin_unit_spectrum", "|lambda| = 1", cc_subject, kModulusTol,
      [&] { return max_modulus_defect(eigenvalues(ucc)); });
  add("trace_log_bridge", "sum Tr(U^k)u^k/k = -log det(I-uU)", cc_subject, kCoefficientTol, [&] {
    const ComplexSeries lhs = log_zeta_series(ucc, kLogOrder);
    ComplexSeries rhs = log_det_series(ucc, kLogOrder);
    for (int k = 0; k <= kLogOrder; ++k) rhs[k] = -rhs[k];
    return max_coeff_deviation(lhs, rhs);
  });

  add("shift_coin_factorization", "det(I-uSC) = (1-b^2u^2)^(m-q) det((1-abu^2)I_q - cu dSd*)", sc_subject,
      kCoefficientTol, [&] {
        return max_coeff_deviation(zeta_reciprocal_direct(usc).reciprocal,
                                   zeta_reciprocal_shift_coin(g, dsc, psc).reciprocal);
      });
  add("shift_coin_spectrum", "SC as C1C2 with C1 = S", sc_subject, kPairingTol, [&] {
    const WalkSpec as_cc = sc.as_two_coin(g);
    const SpectrumReport rep = spectrum_two_coin(g, as_cc.d1, *as_cc.d2, as_cc.p1, as_cc.p2);
    return match_multisets(eigenvalues(usc), rep.lambdas()).max_distance;
  });
  add("shift_coin_unitarity", "U*U = I", sc_subject, kUnitarityTol, [&] { return unitarity_defect(usc); });
  add("shift_coin_unit_spectrum", "|lambda| = 1", sc_subject, kModulusTol,
      [&] { return max_modulus_defect(eigenvalues(usc)); });

  const std::string ihara_subject = describe(g);
  add("ihara_bass_vs_edge", "(1-u^2)^(r-1) det(I-uA+u^2(D-I)) = det(I-uB)", ihara_subject, kIharaTol,
      [&] { return max_coeff_deviation(ihara_bass(g), ihara_edge(g)); });
  add("ihara_euler_product", "prod (1-u^|C|)^-1 = Z(u) through u^12", ihara_subject, kIharaTol, [&] {
    const ComplexSeries euler = euler_product_series(prime_cycles(g, kEulerOrder), kEulerOrder);
    const ComplexSeries bass = ComplexSeries::from_polynomial(ihara_bass(g), kEulerOrder).reciprocal();
    return max_coeff_deviation(euler, bass);
  });
  add("reduced_cycle_counts", "Tr(B^l) = sum_{d|l} d pi(d)", ihara_subject, 0.0, [&] {
    const auto counts = reduced_cycle_counts(g, kEulerOrder);
    const PrimeCycleTable table = prime_cycles(g, kEulerOrder);
    std::int64_t worst = 0;
    for (int l = 1; l <= kEulerOrder; ++l) worst = std::max(worst, std::abs(counts[l] - divisor_sum(table, l)));
    return static_cast<double>(worst);
  });
  return out;
}

std::vector<CheckRecord> periodic_checks(int grid, int threads) {
  std::vector<CheckRecord> out;
  GammaDetOptions options;
  options.threads = threads;

  struct Lattice {
    std::string name;
    CrystalGraph cg;
  };
  const std::vector<Lattice> lattices = {
      {"Z-lattice", integer_lattice()}, {"ladder", ladder_lattice()}, {"square", square_lattice()}};
  const std::vector<CoinParams> second_coins = {{{1.0, 0.0}, {-1.0, 0.0}}, {{0.0, 1.0}, {0.0, -1.0}}};
  std::vector<Complex> us;
  for (double r : {0.05, 0.1, 0.15, 0.2}) {
    us.emplace_back(r, 0.0);
    us.emplace_back(0.0, r);
  }

  for (const auto& lat : lattices) {
    for (const auto& p2 : second_coins) {
      PeriodicWalkSpec spec;
      spec.p2 = p2;
      for (const Complex& u : us) {
        const std::string subject =
            lat.name + " a2=" + describe(p2.a) + " b2=" + describe(p2.b) + " u=" + describe(u) +
            " grid=" + std::to_string(grid);
        out.push_back(run_check("periodic_factorization",
                                "det_G(I-uU) = (1+b2u)^(TrI_R-2TrI_V) det_G(vertex pencil)", -1, subject,
                                kPeriodicTol, [&] {
                                  const auto direct = zeta_periodic_direct(lat.cg, spec, u, grid, kDefaultUMax, options);
                                  const auto factored =
                                      zeta_periodic_factored(lat.cg, spec, u, grid, kDefaultUMax, options);
                                  return std::abs(factored.reciprocal - direct.reciprocal);
                                }));
      }
    }
    out.push_back(run_check("periodic_exponent", "TrI_R - 2TrI_V = 2m - 2n", -1, lat.name, 0.0, [&] {
      const auto r = zeta_periodic_factored(lat.cg, PeriodicWalkSpec{}, Complex(0.1, 0.0), 8, kDefaultUMax, options);
      return static_cast<double>(std::abs(r.exponent - (2 * lat.cg.num_edges() - 2 * lat.cg.num_vertices())));
    }));
    // Below the first Ihara pole 1/(deg - 1) of every test lattice.
    for (double r : {0.05, 0.1, 0.2}) {
      const Complex u(r, 0.0);
      out.push_back(run_check("periodic_ihara_forms", "edge-excess form = Euler-characteristic form", -1,
                              lat.name + " u=" + describe(u) + " grid=" + std::to_string(grid), kDegenerationTol,
                              [&] {
                                const auto res = ihara_periodic(lat.cg, u, grid, options);
                                return std::abs(res.zeta_from_edge_excess - res.zeta_from_euler_char);
                              }));
    }
    for (WalkKind kind : {WalkKind::kShiftCoin, WalkKind::kTwoCoin}) {
      PeriodicWalkSpec spec;
      spec.kind = kind;
      spec.p1 = {std::polar(1.0, 0.3), std::polar(1.0, 2.1)};
      spec.p2 = {std::polar(1.0, -1.2), std::polar(1.0, 0.7)};
      const std::string subject = lat.name + (kind == WalkKind::kShiftCoin ? " sc" : " cc") + " grid=32";
      out.push_back(run_check("fiber_unitarity", "U(theta)*U(theta) = I", -1, subject, kUnitarityTol, [&] {
        double worst = 0.0;
        for (int i = 0; i < grid_size(32, lat.cg.dim()); ++i) {
          worst = std::max(worst, unitarity_defect(fiber_walk_operator(lat.cg, spec, grid_point(i, 32, lat.cg.dim()))));
        }
        return worst;
      }));
      out.push_back(run_check("fiber_unit_spectrum", "|lambda(theta)| = 1", -1, subject, kModulusTol, [&] {
        double worst = 0.0;
        for (int i = 0; i < grid_size(32, lat.cg.dim()); ++i) {
          worst = std::max(worst, max_modulus_defect(eigenvalues(
                                      fiber_walk_operator(lat.cg, spec, grid_point(i, 32, lat.cg.dim())))));
        }
        return worst;
      }));
    }
  }

  for (double r : {0.1, 0.2, 0.3, 0.4, 0.5}) {
    const Complex u(r, 0.0);
    out.push_back(run_check("lattice_ihara_trivial", "Z(Z-lattice, u) = 1", -1,
                            "Z-lattice u=" + describe(u) + " grid=" + std::to_string(grid), 1e-8, [&] {
                              const auto res = ihara_periodic(integer_lattice(), u, grid, options);
                              return std::max(std::abs(res.zeta_from_edge_excess - 1.0),
                                              std::abs(res.zeta_from_euler_char - 1.0));
                            }));
    PeriodicWalkSpec sc;
    sc.kind = WalkKind::kShiftCoin;
    out.push_back(run_check("lattice_walk_trivial", "zeta(Z-lattice, SC Grover, u) = 1", -1,
                            "Z-lattice sc u=" + describe(u) + " grid=" + std::to_string(grid), 1e-8, [&] {
                              return std::abs(zeta_periodic_direct(integer_lattice(), sc, u, grid, kDefaultUMax,
                                                                   options).zeta - 1.0);
                            }));
  }

  // Degeneration to finite graphs.
  for (const auto& [name, g] : std::vector<std::pair<std::string, Graph>>{{"C3", cycle_graph(3)},
                                                                          {"K4", complete_graph(4)}}) {
    const CrystalGraph flat = crystal_from_graph(g);
    const CrystalGraph cover = trivial_shift_crystal(g, 1);
    const ComplexPolynomial bass = ihara_bass(g);
    for (double r : {0.1, 0.2, 0.3}) {
      const Complex u(r, 0.0);
      const Complex finite_zeta = 1.0 / bass(u);
      out.push_back(run_check("degenerate_ihara", "dim 0 periodic Ihara = finite Ihara", -1,
                              name + " dim=0 u=" + describe(u), kDegenerationTol, [&] {
                                return std::abs(ihara_periodic(flat, u, 1, options).zeta_from_edge_excess -
                                                finite_zeta);
                              }));
      out.push_back(run_check("trivial_shift_ihara", "trivial-shift periodic Ihara = finite Ihara", -1,
                              name + " dim=1 u=" + describe(u) + " grid=8", kDegenerationTol, [&] {
                                return std::abs(ihara_periodic(cover, u, 8, options).zeta_from_edge_excess -
                                                finite_zeta);
                              }));
      PeriodicWalkSpec spec;
      spec.p2 = {std::polar(1.0, 0.4), std::polar(1.0, 2.5)};
      const WalkSpec finite_spec =
          WalkSpec::two_coin(origin_grover_isometry(g), spec.p1, terminal_grover_isometry(g), spec.p2);
      const Complex finite_det = zeta_reciprocal_direct(evolution(g, finite_spec)).reciprocal(u);
      out.push_back(run_check("degenerate_walk_zeta", "dim 0 det_G(I-uU) = det(I-uU)", -1,
                              name + " dim=0 u=" + describe(u), kDegenerationTol, [&] {
                                return std::abs(zeta_periodic_direct(flat, spec, u, 1, kDefaultUMax, options).reciprocal -
                                                finite_det);
                              }));
    }
  }
  return out;
}

VerifyReport run_verification(const VerifyOptions& options) {
  if (options.instances < 0) throw Error(ErrorKind::kInvalidParameter, "instance count must be non-negative");
  VerifyReport report;
  if (options.suite != Suite::kPeriodic) {
    std::vector<std::vector<CheckRecord>> per_instance(options.instances);
    parallel_for(options.instances, options.threads, [&](int i) {
      try {
        per_instance[i] = finite_instance_checks(options.seed, i, options.nmax);
      } catch (const std::exception& e) {
        per_instance[i].push_back(CheckRecord{"instance_setup", "", i, "", std::numeric_limits<double>::infinity(),
                                              0.0, false, 0.0, e.what()});
      }
    });
    for (auto& recs : per_instance) {
      for (auto& r : recs) report.records.push_back(std::move(r));
    }
  }
  if (options.suite != Suite::kFinite) {
    auto recs = periodic_checks(options.grid, options.threads);
    for (auto& r : recs) report.records.push_back(std::move(r));
  }
  return report;
}

std::string format_report(const VerifyReport& report, bool timing) {
  std::string out;
  char buf[128];
  for (const auto& r : report.records) {
    out += r.pass ? "PASS " : "FAIL ";
    out += r.identity;
    if (r.instance >= 0) out += " instance=" + std::to_string(r.instance);
    if (!r.subject.empty()) out += " [" + r.subject + "]";
    std::snprintf(buf, sizeof buf, " deviation=%.3e tolerance=%.0e", r.deviation, r.tolerance);
    out += buf;
    if (timing) {
      std::snprintf(buf, sizeof buf, " seconds=%.4f", r.seconds);
      out += buf;
    }
    if (!r.anchor.empty()) out += " anchor=\"" + r.anchor + "\"";
    if (!r.detail.empty()) out += " error=\"" + r.detail + "\"";
    out += "\n";
  }
  std::snprintf(buf, sizeof buf, "summary: %zu checks, %d failures\n", report.records.size(), report.failures());
  out += buf;
  return out;
}

}  // namespace qwzeta
