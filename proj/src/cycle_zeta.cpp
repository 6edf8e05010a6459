#include "qwzeta/cycle_zeta.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace qwzeta {

HashimotoMatrix hashimoto_matrix(const Graph& g) {
  const int dim = g.num_arcs();
  IntMatrix b = IntMatrix::Zero(dim, dim);
  for (int e = 0; e < dim; ++e)
    for (int f : g.out_arcs(g.terminal(e)))
      if (f != Graph::inverse(e)) b(e, f) = 1;
  return {std::move(b)};
}

ComplexPolynomial ihara_bass(const Graph& g) {
  const int r = betti_number(g);
  const int n = g.num_vertices();
  const DegreeData dd = adjacency_and_degree(g);
  // det(I - uA + u^2 Q) = det(I - u L) with the companion block L = [[A, -Q], [I, 0]].
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  companion.topLeftCorner(n, n) = dd.adjacency;
  companion.topRightCorner(n, n) = -(dd.degree_matrix - Eigen::MatrixXd::Identity(n, n));
  companion.bottomLeftCorner(n, n) = Eigen::MatrixXd::Identity(n, n);
  const ComplexPolynomial det = det_resolvent_poly(companion);
  const ComplexPolynomial one_minus_u2{Complex(1), Complex(0), Complex(-1)};
  return times_power(det, one_minus_u2, r - 1);
}

ComplexPolynomial ihara_edge(const Graph& g) {
  require_connected(g);
  return det_resolvent_poly(hashimoto_matrix(g).b);
}

namespace {

class CycleSearch {
 public:
  CycleSearch(const Graph& g, int max_length, PrimeCycleTable& table)
      : g_(g), max_length_(max_length), table_(table) {}

  void run() {
    for (int s = 0; s < g_.num_arcs(); ++s) {
      start_ = s;
      path_.assign(1, s);
      extend();
    }
  }

 private:
  void extend() {
    const int last = path_.back();
    const int len = static_cast<int>(path_.size());
    if (g_.terminal(last) == g_.origin(start_) && start_ != Graph::inverse(last)) record();
    if (len == max_length_) return;
    for (int f : g_.out_arcs(g_.terminal(last))) {
      if (f == Graph::inverse(last) || f < start_) continue;
      path_.push_back(f);
      extend();
      path_.pop_back();
    }
  }

  // Keeps the path iff it is its own strictly minimal rotation: a smaller
  // rotation means another start represents the class, an equal one means the
  // path is a multiple of a shorter closed path.
  void record() {
    const int len = static_cast<int>(path_.size());
    for (int shift = 1; shift < len; ++shift) {
      for (int k = 0; k < len; ++k) {
        const int rotated = path_[(k + shift) % len];
        if (rotated < path_[k]) return;
        if (rotated > path_[k]) break;
        if (k == len - 1) return;
      }
    }
    ++table_.counts[len];
    table_.representatives[len].push_back(path_);
  }

  const Graph& g_;
  int max_length_;
  PrimeCycleTable& table_;
  int start_ = 0;
  std::vector<int> path_;
};

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorKind::kLimitExceeded, "integer overflow in series");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorKind::kLimitExceeded, "integer overflow in series");
  return out;
}

}  // namespace

PrimeCycleTable prime_cycles(const Graph& g, int max_length, int length_cap) {
  if (max_length < 1) throw Error(ErrorKind::kInvalidParameter, "cycle length bound must be at least 1");
  if (max_length > length_cap) {
    throw Error(ErrorKind::kLimitExceeded,
                "cycle length " + std::to_string(max_length) + " exceeds the cap " + std::to_string(length_cap));
  }
  PrimeCycleTable table;
  table.max_length = max_length;
  table.counts.assign(max_length + 1, 0);
  table.representatives.resize(max_length + 1);
  CycleSearch(g, max_length, table).run();
  return table;
}

ComplexSeries euler_product_series(const PrimeCycleTable& table, int order) {
  if (order > table.max_length) {
    throw Error(ErrorKind::kInsufficientEnumeration,
                "table enumerated through length " + std::to_string(table.max_length) + ", series needs " +
                    std::to_string(order));
  }
  // Integer coefficients throughout: (1 - x)^{-c} = sum_j C(c+j-1, j) x^j.
  PowerSeries<std::int64_t> product(order);
  product[0] = 1;
  for (int len = 1; len <= order; ++len) {
    const std::int64_t c = table.counts[len];
    if (c == 0) continue;
    PowerSeries<std::int64_t> factor(order);
    std::int64_t binom = 1;
    for (int j = 0; j * len <= order; ++j) {
      if (j > 0) binom = checked_mul(binom, c + j - 1) / j;
      factor[j * len] = binom;
    }
    PowerSeries<std::int64_t> next(order);
    for (int i = 0; i <= order; ++i) {
      if (product[i] == 0) continue;
      for (int j = 0; i + j <= order; ++j) next[i + j] = checked_add(next[i + j], checked_mul(product[i], factor[j]));
    }
    product = next;
  }
  ComplexSeries out(order);
  for (int k = 0; k <= order; ++k) out[k] = Complex(static_cast<double>(product[k]), 0.0);
  return out;
}

std::vector<std::int64_t> reduced_cycle_counts(const Graph& g, int order) {
  if (order < 1) throw Error(ErrorKind::kInvalidParameter, "order must be at least 1");
  const IntMatrix b = hashimoto_matrix(g).b;
  std::vector<std::int64_t> out(order + 1, 0);
  if (b.rows() == 0) return out;
  // Entries of B^l are bounded by (max row sum)^l; refuse before int64 overflows.
  const long double row_max = static_cast<long double>(b.rowwise().sum().maxCoeff());
  if (order * std::log10(std::max<long double>(row_max, 1.0L)) + std::log10(static_cast<long double>(b.rows())) >
      17.5L) {
    throw Error(ErrorKind::kLimitExceeded, "Tr(B^l) would overflow 64-bit integers");
  }
  IntMatrix power = IntMatrix::Identity(b.rows(), b.cols());
  for (int l = 1; l <= order; ++l) {
    power = power * b;
    out[l] = power.trace();
  }
  return out;
}

}  // namespace qwzeta
