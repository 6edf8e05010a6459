#include <doctest.h>

#include "qwzeta/cycle_zeta.hpp"
#include "qwzeta/errors.hpp"
#include "qwzeta/verification.hpp"
#include "test_support.hpp"

using namespace qwzeta;
using qwzeta::testing::golden;
using qwzeta::testing::golden_poly;

TEST_CASE("hashimoto_matrix") {
  CHECK(hashimoto_matrix(path_graph(2)).b == IntMatrix::Zero(2, 2));

  const IntMatrix c3 = hashimoto_matrix(cycle_graph(3)).b;
  CHECK(c3.rows() == 6);
  for (int e = 0; e < 6; ++e) CHECK(c3.row(e).sum() == 1);

  const IntMatrix k4 = hashimoto_matrix(complete_graph(4)).b;
  for (int e = 0; e < 12; ++e) {
    CHECK(k4.row(e).sum() == 2);
    CHECK(k4(e, Graph::inverse(e)) == 0);
  }
}

TEST_CASE("Ihara zeta: K2, C3 and K4") {
  CHECK(max_coeff_deviation(ihara_bass(path_graph(2)), ComplexPolynomial({Complex(1.0)})) < 1e-14);
  CHECK(max_coeff_deviation(ihara_edge(path_graph(2)), ComplexPolynomial({Complex(1.0)})) == 0.0);

  CHECK(max_coeff_deviation(ihara_edge(cycle_graph(3)), golden_poly("c3_ihara_edge")) < 1e-12);
  CHECK(max_coeff_deviation(ihara_bass(cycle_graph(3)), golden_poly("c3_ihara_edge")) < 1e-12);

  CHECK(max_coeff_deviation(ihara_edge(complete_graph(4)), golden_poly("k4_ihara_edge")) < 1e-9);
  CHECK(max_coeff_deviation(ihara_bass(complete_graph(4)), golden_poly("k4_ihara_closed_form")) < 1e-9);
}

TEST_CASE("Ihara zeta of trees is 1") {
  for (int n = 2; n <= 6; ++n) {
    CHECK(max_coeff_deviation(ihara_bass(path_graph(n)), ComplexPolynomial({Complex(1.0)})) < 1e-12);
    CHECK(max_coeff_deviation(ihara_edge(path_graph(n)), ComplexPolynomial({Complex(1.0)})) < 1e-12);
  }
}

TEST_CASE("prime_cycles") {
  const PrimeCycleTable c3 = prime_cycles(cycle_graph(3), 9);
  CHECK(c3.counts[3] == 2);
  for (int l = 1; l <= 9; ++l)
    if (l != 3) CHECK(c3.counts[l] == 0);

  const PrimeCycleTable k4 = prime_cycles(complete_graph(4), 4);
  CHECK(k4.counts[3] == 8);
  CHECK(k4.counts[4] == 6);
  CHECK(k4.representatives[3].size() == 8);

  const PrimeCycleTable tree = prime_cycles(path_graph(5), 8);
  for (int l = 1; l <= 8; ++l) CHECK(tree.counts[l] == 0);
}

TEST_CASE("prime cycle representatives are minimal rotations of reduced cycles") {
  const Graph k4 = complete_graph(4);
  const PrimeCycleTable t = prime_cycles(k4, 6);
  for (int l = 1; l <= 6; ++l) {
    for (const auto& cyc : t.representatives[l]) {
      REQUIRE(static_cast<int>(cyc.size()) == l);
      for (int i = 0; i < l; ++i) {
        const int e = cyc[i], f = cyc[(i + 1) % l];
        CHECK(k4.terminal(e) == k4.origin(f));
        CHECK(f != Graph::inverse(e));
      }
      std::vector<int> rot = cyc;
      for (int r = 1; r < l; ++r) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        CHECK(cyc <= rot);
      }
    }
  }
}

TEST_CASE("prime_cycles refuses lengths above the cap") {
  try {
    prime_cycles(complete_graph(4), 20);
    FAIL("expected LimitExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kLimitExceeded);
  }
}

TEST_CASE("Euler product matches the reciprocal of the edge determinant") {
  for (const Graph& g : {cycle_graph(3), complete_graph(4)}) {
    const ComplexSeries euler = euler_product_series(prime_cycles(g, 12), 12);
    const ComplexSeries recip = ComplexSeries::from_polynomial(ihara_edge(g), 12).reciprocal();
    CHECK(max_coeff_deviation(euler, recip) < 1e-9);
  }
}

TEST_CASE("reduced_cycle_counts") {
  const auto k4 = reduced_cycle_counts(complete_graph(4), 12);
  const auto c3 = reduced_cycle_counts(cycle_graph(3), 12);
  for (int l = 1; l <= 12; ++l) {
    CHECK(k4[l] == golden().at("k4_reduced_counts")[l - 1].get<std::int64_t>());
    CHECK(c3[l] == golden().at("c3_reduced_counts")[l - 1].get<std::int64_t>());
  }
}

TEST_CASE("property: counts are divisor sums of prime cycle counts") {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = random_connected_graph(rng, 6, 8);
    const int order = 8;
    const auto counts = reduced_cycle_counts(g, order);
    const PrimeCycleTable t = prime_cycles(g, order);
    for (int l = 1; l <= order; ++l) {
      std::int64_t sum = 0;
      for (int d = 1; d <= l; ++d)
        if (l % d == 0) sum += d * t.counts[d];
      CHECK(sum == counts[l]);
    }
  }
}

TEST_CASE("property: log of the Ihara zeta is the trace generating series") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = random_connected_graph(rng, 7, 10);
    const int order = 10;
    const auto counts = reduced_cycle_counts(g, order);
    const ComplexSeries log_recip = series_log(ihara_bass(g), order);
    for (int l = 1; l <= order; ++l)
      CHECK(std::abs(-log_recip[l] - static_cast<double>(counts[l]) / l) < 1e-8 * (1.0 + counts[l]));
    CHECK(max_coeff_deviation(ihara_bass(g), ihara_edge(g)) < 1e-9);
  }
}
