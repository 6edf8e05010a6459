#include <doctest.h>

#include <numbers>

#include "qwzeta/cycle_zeta.hpp"
#include "qwzeta/errors.hpp"
#include "qwzeta/verification.hpp"
#include "qwzeta/zeta_finite.hpp"
#include "test_support.hpp"

using namespace qwzeta;
using qwzeta::testing::golden_poly;

namespace {

const CoinParams kGroverParams{1.0, -1.0};

ComplexPolynomial binomial_power(Complex root, int k) { return ComplexPolynomial::linear(1.0, -root).pow(k); }

}  // namespace

TEST_CASE("direct reciprocal zeta") {
  const Graph c3 = cycle_graph(3);
  const CMatrix u = evolution(c3, WalkSpec::shift_coin(origin_grover_isometry(c3), kGroverParams));
  const ZetaResult r = zeta_reciprocal_direct(u);
  CHECK(r.reciprocal(Complex(0.0)) == Complex(1.0));
  CHECK(max_coeff_deviation(r.reciprocal, golden_poly("c3_sc_grover_det")) < 1e-12);
  CHECK(r.method == ZetaMethod::kDirect);
}

TEST_CASE("direct zeta with a scalar second coin splits by coin eigenvalues") {
  const Graph k4 = complete_graph(4);
  const Isometry d1 = random_isometry(5, k4, 3);
  const CoinParams p1{std::polar(1.0, 0.3), std::polar(1.0, 1.9)};
  const CMatrix u = evolution(k4, WalkSpec::two_coin(d1, p1, origin_grover_isometry(k4), {1.0, 1.0}));
  const ComplexPolynomial expected = binomial_power(p1.a, 5) * binomial_power(p1.b, 12 - 5);
  CHECK(max_coeff_deviation(zeta_reciprocal_direct(u).reciprocal, expected) < 1e-10);
  // The factored form covers c2 = 0 too.
  CHECK(max_coeff_deviation(zeta_reciprocal_two_coin(k4, d1, origin_grover_isometry(k4), p1, {1.0, 1.0}).reciprocal,
                            expected) < 1e-10);
}

TEST_CASE("shift-coin factorization: C3 and K4 Grover walks") {
  const Graph c3 = cycle_graph(3);
  const ZetaResult r = zeta_reciprocal_shift_coin(c3, origin_grover_isometry(c3), kGroverParams);
  CHECK(max_coeff_deviation(r.reciprocal, golden_poly("c3_sc_grover_det")) < 1e-10);
  REQUIRE(r.factors);
  CHECK(r.factors->leading_exponent == 0);
  CHECK(r.factors->q == 3);

  const Graph k4 = complete_graph(4);
  const ComplexPolynomial fact = zeta_reciprocal_shift_coin(k4, origin_grover_isometry(k4), kGroverParams).reciprocal;
  const CMatrix u = evolution(k4, WalkSpec::shift_coin(origin_grover_isometry(k4), kGroverParams));
  CHECK(max_coeff_deviation(fact, zeta_reciprocal_direct(u).reciprocal) < 1e-10);
  CHECK(max_coeff_deviation(fact, golden_poly("k4_sc_grover_det")) < 1e-10);
}

TEST_CASE("shift-coin factorization with a = b collapses to counts") {
  const Graph k4 = complete_graph(4);
  const Complex a = std::polar(1.0, 0.8);
  const Isometry d = random_isometry(3, k4, 17);
  // c = 0 leaves U = a S, whose eigenvalues are +-1 each m times (scaled by a).
  const ComplexPolynomial expected = ComplexPolynomial({Complex(1.0), Complex(0.0), -a * a}).pow(6);
  CHECK(max_coeff_deviation(zeta_reciprocal_shift_coin(k4, d, {a, a}).reciprocal, expected) < 1e-12);
}

TEST_CASE("shift-coin factorization on a tree divides out the negative power") {
  const Graph tree = path_graph(4);  // m = 3 < q = 4
  const Isometry d = origin_grover_isometry(tree);
  const CoinParams p{std::polar(1.0, 0.5), std::polar(1.0, 2.2)};
  const CMatrix u = evolution(tree, WalkSpec::shift_coin(d, p));
  const ZetaResult r = zeta_reciprocal_shift_coin(tree, d, p);
  CHECK(r.factors->leading_exponent == -1);
  CHECK(max_coeff_deviation(r.reciprocal, zeta_reciprocal_direct(u).reciprocal) < 1e-10);
}

TEST_CASE("two-coin factorization: C3 Grover pair and K4 random instances") {
  const Graph c3 = cycle_graph(3);
  const Isometry o = origin_grover_isometry(c3), t = terminal_grover_isometry(c3);
  const CMatrix u3 = evolution(c3, WalkSpec::two_coin(o, kGroverParams, t, kGroverParams));
  CHECK(max_coeff_deviation(zeta_reciprocal_two_coin(c3, o, t, kGroverParams, kGroverParams).reciprocal,
                            zeta_reciprocal_direct(u3).reciprocal) < 1e-10);

  const Graph k4 = complete_graph(4);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    std::mt19937_64 rng(seed);
    const Isometry d1 = random_isometry(3, k4, seed), d2 = random_isometry(3, k4, seed + 1000);
    const CoinParams p1 = random_unit_params(rng), p2 = random_unit_params(rng);
    const CMatrix u = evolution(k4, WalkSpec::two_coin(d1, p1, d2, p2));
    CHECK(max_coeff_deviation(zeta_reciprocal_two_coin(k4, d1, d2, p1, p2).reciprocal,
                              zeta_reciprocal_direct(u).reciprocal) < 1e-8);
    CHECK(max_coeff_deviation(char_poly_two_coin(k4, d1, d2, p1, p2), char_poly(u)) < 1e-8);
    CHECK(match_multisets(spectrum_two_coin(k4, d1, d2, p1, p2).lambdas(), eigenvalues(u)).max_distance < 1e-7);
  }
}

TEST_CASE("two-coin factorization with q < p swaps or refuses") {
  const Graph k4 = complete_graph(4);
  const Isometry d1 = random_isometry(5, k4, 1), d2 = random_isometry(2, k4, 2);
  const CoinParams p1{std::polar(1.0, 0.1), std::polar(1.0, 1.3)}, p2{std::polar(1.0, -0.6), std::polar(1.0, 2.6)};
  const ZetaResult r = zeta_reciprocal_two_coin(k4, d1, d2, p1, p2);
  REQUIRE(r.factors);
  CHECK(r.factors->swapped);
  CHECK_FALSE(r.factors->note.empty());
  const CMatrix u = evolution(k4, WalkSpec::two_coin(d1, p1, d2, p2));
  CHECK(max_coeff_deviation(r.reciprocal, zeta_reciprocal_direct(u).reciprocal) < 1e-8);

  try {
    zeta_reciprocal_two_coin(k4, d1, d2, p1, p2, SwapPolicy::kStrict);
    FAIL("expected SwapOrFactorError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kSwapOrFactor);
  }
}

TEST_CASE("two-coin factorization with p + q > 2m") {
  const Graph k3 = cycle_graph(3);  // 2m = 6
  const Isometry d1 = random_isometry(4, k3, 8), d2 = random_isometry(5, k3, 9);
  const CoinParams p1{std::polar(1.0, 0.2), std::polar(1.0, 1.0)}, p2{std::polar(1.0, 2.0), std::polar(1.0, -2.4)};
  const CMatrix u = evolution(k3, WalkSpec::two_coin(d1, p1, d2, p2));
  const ZetaResult r = zeta_reciprocal_two_coin(k3, d1, d2, p1, p2);
  CHECK(r.factors->leading_exponent == -3);
  CHECK(max_coeff_deviation(r.reciprocal, zeta_reciprocal_direct(u).reciprocal) < 1e-8);
  const SpectrumReport rep = spectrum_two_coin(k3, d1, d2, p1, p2);
  CHECK(rep.values.size() == 6);
  CHECK(rep.b1b2_count == -3);
  CHECK(match_multisets(rep.lambdas(), eigenvalues(u)).max_distance < 1e-7);
}

TEST_CASE("char_poly_two_coin: scalar second coin and the unitary determinant") {
  const Graph k4 = complete_graph(4);
  const Isometry d1 = random_isometry(4, k4, 21);
  const CoinParams p1{std::polar(1.0, 1.1), std::polar(1.0, -0.3)};
  const ComplexPolynomial cp = char_poly_two_coin(k4, d1, origin_grover_isometry(k4), p1, {1.0, 1.0});
  const ComplexPolynomial expected =
      ComplexPolynomial::linear(-p1.a, 1.0).pow(4) * ComplexPolynomial::linear(-p1.b, 1.0).pow(8);
  CHECK(max_coeff_deviation(cp, expected) < 1e-10);

  std::mt19937_64 rng(4);
  const Isometry e1 = random_isometry(3, k4, 4), e2 = random_isometry(4, k4, 5);
  const ComplexPolynomial cp2 = char_poly_two_coin(k4, e1, e2, random_unit_params(rng), random_unit_params(rng));
  CHECK(std::abs(std::abs(cp2(Complex(0.0))) - 1.0) < 1e-9);
}

TEST_CASE("spectrum: Grover double root and multiplicity ledger") {
  const Graph c3 = cycle_graph(3);
  const SpectrumReport rep =
      spectrum_two_coin(c3, origin_grover_isometry(c3), terminal_grover_isometry(c3), kGroverParams, kGroverParams);
  CHECK(rep.quadratic_count + rep.b1a2_count + rep.b1b2_count == 6);
  int at_one = 0;
  for (const auto& v : rep.values) {
    if (v.cls == SpectralClass::kQuadraticPair && std::abs(v.mu - 1.0) < 1e-12) {
      CHECK(std::abs(v.lambda - 1.0) < 1e-12);
      ++at_one;
    }
  }
  CHECK(at_one == 2);
}

TEST_CASE("spectrum of the C3 shift-coin Grover walk") {
  const Graph c3 = cycle_graph(3);
  const WalkSpec cc = WalkSpec::shift_coin(origin_grover_isometry(c3), kGroverParams).as_two_coin(c3);
  const SpectrumReport rep = spectrum_two_coin(c3, cc.d1, *cc.d2, cc.p1, cc.p2);
  const Complex w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  const std::vector<Complex> expected = {1.0, 1.0, w, std::conj(w), w, std::conj(w)};
  CHECK(match_multisets(rep.lambdas(), expected).max_distance < 1e-12);
}

TEST_CASE("log_zeta_series") {
  CHECK(max_coeff_deviation(log_zeta_series(CMatrix::Zero(3, 3), 5), ComplexSeries(5)) == 0.0);
  const ComplexSeries id = log_zeta_series(CMatrix::Identity(4, 4), 6);
  for (int k = 1; k <= 6; ++k) CHECK(std::abs(id[k] - 4.0 / k) < 1e-15);

  const Graph k4 = complete_graph(4);
  const CMatrix u = evolution(k4, WalkSpec::shift_coin(origin_grover_isometry(k4), kGroverParams));
  ComplexSeries neg = series_log(zeta_reciprocal_direct(u).reciprocal, 10);
  for (int k = 0; k <= 10; ++k) neg[k] = -neg[k];
  CHECK(max_coeff_deviation(log_zeta_series(u, 10), neg) < 1e-8);
  ComplexSeries neg_ext = log_det_series(u, 10);
  for (int k = 0; k <= 10; ++k) neg_ext[k] = -neg_ext[k];
  CHECK(max_coeff_deviation(log_zeta_series(u, 10), neg_ext) < 1e-8);
}

TEST_CASE("property: two-coin reciprocal zeta is symmetric in the coins") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_connected_graph(rng, 7, 10);
    const Isometry d1 = random_vertex_isometry(rng, g), d2 = random_vertex_isometry(rng, g);
    const CoinParams p1 = random_unit_params(rng), p2 = random_unit_params(rng);
    CHECK(max_coeff_deviation(zeta_reciprocal_two_coin(g, d1, d2, p1, p2).reciprocal,
                              zeta_reciprocal_two_coin(g, d2, d1, p2, p1).reciprocal) < 1e-8);
  }
}

TEST_CASE("property: factorizations, spectra and the trace-log bridge on random graphs") {
  for (int i = 0; i < 60; ++i) {
    for (const auto& rec : finite_instance_checks(99, i, 8)) {
      INFO(rec.identity << " instance " << i << " [" << rec.subject << "] " << rec.detail);
      CHECK(rec.deviation <= rec.tolerance);
    }
  }
}

TEST_CASE("property: non-unitary parameters keep the identities") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = random_connected_graph(rng, 6, 8);
    const Isometry d1 = random_vertex_isometry(rng, g), d2 = random_vertex_isometry(rng, g);
    std::uniform_real_distribution<double> r(0.5, 1.2);
    const CoinParams p1{Complex(r(rng), r(rng)), Complex(-r(rng), r(rng))};
    const CoinParams p2{Complex(r(rng), -r(rng)), Complex(r(rng), r(rng))};
    const CMatrix u = evolution(g, WalkSpec::two_coin(d1, p1, d2, p2, false));
    CHECK(max_coeff_deviation(zeta_reciprocal_two_coin(g, d1, d2, p1, p2).reciprocal,
                              zeta_reciprocal_direct(u).reciprocal) < 1e-8);
  }
}
