// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "qwzeta/cycle_zeta.hpp"
#include "qwzeta/verification.hpp"
#include "qwzeta/zeta_finite.hpp"
#include "test_support.hpp"

using namespace qwzeta;
using qwzeta::testing::golden;
using qwzeta::testing::golden_poly;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Tally {
  int checks = 0;
  int failures = 0;
  double worst = 0.0;
  std::string first_failure;

  void add(bool pass, double deviation, const std::string& what) {
    ++checks;
    if (std::isfinite(deviation)) worst = std::max(worst, deviation);
    if (!pass) {
      ++failures;
      if (first_failure.empty()) first_failure = what;
    }
  }
  void add(const CheckRecord& r) {
    add(r.pass, r.deviation, r.identity + " instance=" + std::to_string(r.instance) + " [" + r.subject + "] " + r.detail);
  }
  void add_identities(const VerifyReport& report, const std::set<std::string>& ids) {
    for (const auto& r : report.records)
      if (ids.count(r.identity)) add(r);
  }
};

int failed_criteria = 0;

void report(int number, const std::string& title, const Tally& t, const std::string& extra = "") {
  const bool pass = t.failures == 0 && t.checks > 0;
  if (!pass) ++failed_criteria;
  std::printf("%s criterion %d: %s (%d checks, %d failures, worst deviation %.3e%s%s)\n", pass ? "PASS" : "FAIL",
              number, title.c_str(), t.checks, t.failures, t.worst, extra.empty() ? "" : ", ", extra.c_str());
  if (!t.first_failure.empty()) std::printf("  first failure: %s\n", t.first_failure.c_str());
}

ComplexSeries euler_through_12(const Graph& g) { return euler_product_series(prime_cycles(g, 12), 12); }

}  // namespace

int main() {
  VerifyOptions finite;
  finite.suite = Suite::kFinite;
  finite.instances = 100;
  finite.seed = 1;
  finite.nmax = 8;

  const auto finite_start = Clock::now();
  const VerifyReport finite_report = run_verification(finite);
  const double finite_seconds = seconds_since(finite_start);

  VerifyOptions periodic;
  periodic.suite = Suite::kPeriodic;
  periodic.grid = 256;
  const auto periodic_start = Clock::now();
  const VerifyReport periodic_report = run_verification(periodic);
  const double periodic_seconds = seconds_since(periodic_start);

  char timing[96];

  // 1. Two-coin factorization over random instances.
  {
    Tally t;
    t.add_identities(finite_report, {"two_coin_factorization", "instance_setup"});
    t.add(finite_seconds < 30.0, 0.0, "finite suite exceeded 30 s");
    std::snprintf(timing, sizeof timing, "finite suite %.1f s for %d instances, limit 30 s", finite_seconds, finite.instances);
    report(1, "two-coin reciprocal zeta, factored vs direct <= 1e-8", t, timing);
  }

  // 2. Characteristic polynomial, spectrum and multiplicity ledger.
  {
    Tally t;
    t.add_identities(finite_report, {"two_coin_char_poly", "two_coin_spectrum", "spectrum_multiplicity"});
    report(2, "two-coin characteristic polynomial <= 1e-8, spectrum pairing <= 1e-7, multiplicities sum to 2m", t);
  }

  // 3. Shift-coin factorization, plus the C3 Grover closed form.
  {
    Tally t;
    t.add_identities(finite_report, {"shift_coin_factorization", "shift_coin_spectrum"});
    const Graph c3 = cycle_graph(3);
    const ZetaResult grover = zeta_reciprocal_shift_coin(c3, origin_grover_isometry(c3), {1.0, -1.0});
    const ComplexPolynomial closed = ComplexPolynomial({Complex(1.0), 0.0, 0.0, Complex(-1.0)}).pow(2);
    const double dev = max_coeff_deviation(grover.reciprocal, closed);
    t.add(dev <= 1e-10, dev, "C3 Grover shift-coin walk vs (1-u^3)^2");
    report(3, "shift-coin reciprocal zeta, factored vs direct <= 1e-8; C3 Grover = (1-u^3)^2", t);
  }

  // 4. Ihara: vertex determinant, edge determinant and Euler product.
  {
    Tally t;
    std::vector<std::pair<std::string, Graph>> graphs = {{"C3", cycle_graph(3)}, {"K4", complete_graph(4)}};
    std::mt19937_64 rng(4);
    for (int i = 0; i < 50; ++i) graphs.emplace_back("random " + std::to_string(i), random_connected_graph(rng, 8));
    for (const auto& [name, g] : graphs) {
      const ComplexPolynomial bass = ihara_bass(g), edge = ihara_edge(g);
      const double bass_edge = max_coeff_deviation(bass, edge);
      t.add(bass_edge <= 1e-9, bass_edge, name + " vertex vs edge determinant");
      const ComplexSeries recip = ComplexSeries::from_polynomial(edge, 12).reciprocal();
      const double euler = max_coeff_deviation(euler_through_12(g), recip);
      t.add(euler <= 1e-9, euler, name + " Euler product vs determinant through u^12");
    }
    const double golden_dev = max_coeff_deviation(ihara_edge(complete_graph(4)), golden_poly("k4_ihara_edge"));
    t.add(golden_dev <= 1e-9, golden_dev, "K4 edge determinant vs exact 12x12 oracle");
    const double closed_dev = max_coeff_deviation(ihara_bass(complete_graph(4)), golden_poly("k4_ihara_closed_form"));
    t.add(closed_dev <= 1e-9, closed_dev, "K4 vertex determinant vs exact closed form");
    report(4, "Ihara vertex = edge determinant <= 1e-9, Euler product through u^12, K4 oracle", t,
           "52 graphs");
  }

  // 5. Trace-log bridge and reduced cycle counts.
  {
    Tally t;
    t.add_identities(finite_report, {"trace_log_bridge", "reduced_cycle_counts"});
    for (const auto& [key, g] :
         std::vector<std::pair<std::string, Graph>>{{"k4_reduced_counts", complete_graph(4)},
                                                    {"c3_reduced_counts", cycle_graph(3)}}) {
      const auto counts = reduced_cycle_counts(g, 12);
      for (int l = 1; l <= 12; ++l) {
        const auto expected = golden().at(key)[l - 1].get<std::int64_t>();
        t.add(counts[l] == expected, static_cast<double>(std::llabs(counts[l] - expected)),
              key + " length " + std::to_string(l));
      }
    }
    report(5, "trace-log bridge through u^10 <= 1e-8; Tr(B^l) exact through l = 12", t);
  }

  // 6. Periodic factorization at grid 256.
  {
    Tally t;
    t.add_identities(periodic_report, {"periodic_factorization", "periodic_exponent"});
    const bool fast = periodic_seconds < 60.0;
    t.add(fast, 0.0, "periodic suite exceeded 60 s");
    std::snprintf(timing, sizeof timing, "periodic suite %.1f s, limit 60 s", periodic_seconds);
    report(6, "periodic factored vs direct <= 1e-6 on Z, ladder, square lattices at grid 256", t, timing);
  }

  // 7. Degeneration to finite graphs and trivial lattices.
  {
    Tally t;
    t.add_identities(periodic_report, {"degenerate_ihara", "trivial_shift_ihara", "degenerate_walk_zeta",
                                       "lattice_ihara_trivial", "lattice_walk_trivial", "periodic_ihara_forms"});
    report(7, "dim 0 and trivial-shift crystals match finite results <= 1e-9; Z-lattice zeta = 1 <= 1e-8", t);
  }

  // 8. Unitarity and unit-modulus spectra.
  {
    Tally t;
    t.add_identities(finite_report,
                     {"two_coin_unitarity", "two_coin_unit_spectrum", "shift_coin_unitarity", "shift_coin_unit_spectrum"});
    t.add_identities(periodic_report, {"fiber_unitarity", "fiber_unit_spectrum"});
    report(8, "U*U = I <= 1e-10 and |lambda| = 1 <= 1e-9, finite and fibered", t);
  }

  // 9. Determinism: repeated runs and different thread counts give identical bytes.
  {
    Tally t;
    const std::string first = format_report(finite_report);
    const std::string again = format_report(run_verification(finite));
    t.add(first == again, first == again ? 0.0 : 1.0, "finite report differs between runs");
    VerifyOptions single = finite;
    single.threads = 1;
    const std::string serial = format_report(run_verification(single));
    t.add(first == serial, first == serial ? 0.0 : 1.0, "finite report differs with one thread");
    VerifyOptions small_periodic = periodic;
    small_periodic.grid = 32;
    const std::string p1 = format_report(run_verification(small_periodic));
    small_periodic.threads = 1;
    const std::string p2 = format_report(run_verification(small_periodic));
    t.add(p1 == p2, p1 == p2 ? 0.0 : 1.0, "periodic report differs with one thread");
    report(9, "fixed seeds reproduce byte-identical reports", t);
  }

  std::printf("%s: %d of 9 criteria failed\n", failed_criteria == 0 ? "ACCEPTED" : "REJECTED", failed_criteria);
  return failed_criteria == 0 ? 0 : 1;
}
