#ifndef QWZETA_CYCLE_ZETA_HPP
#define QWZETA_CYCLE_ZETA_HPP

#include <cstdint>
#include <vector>

#include "qwzeta/graph.hpp"
#include "qwzeta/linalg.hpp"

namespace qwzeta {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Non-backtracking arc-to-arc matrix: B(e, f) = 1 iff t(e) = o(f) and f != e^-1.
struct HashimotoMatrix {
  IntMatrix b;
};

/// Prime cycles through a maximum length. counts[l] is the number of classes
/// of length l (counts[0] unused); representatives[l] holds the
/// lexicographically minimal rotation of each class.
struct PrimeCycleTable {
  int max_length = 0;
  std::vector<std::int64_t> counts;
  std::vector<std::vector<std::vector<int>>> representatives;
};

inline constexpr int kDefaultCycleLengthCap = 16;

HashimotoMatrix hashimoto_matrix(const Graph& g);

/// Z(G,u)^{-1} = (1 - u^2)^{r-1} det(I - uA + u^2 (D - I)). For trees the
/// negative power is taken as an exact polynomial quotient.
ComplexPolynomial ihara_bass(const Graph& g);

/// Z(G,u)^{-1} = det(I - uB).
ComplexPolynomial ihara_edge(const Graph& g);

/// Depth-first enumeration of primitive reduced closed paths up to `max_length`,
/// one representative per rotation class. Inverse classes are distinct.
PrimeCycleTable prime_cycles(const Graph& g, int max_length, int length_cap = kDefaultCycleLengthCap);

/// prod over prime cycles (1 - u^{|C|})^{-1} modulo u^{L+1}.
ComplexSeries euler_product_series(const PrimeCycleTable& table, int order);

/// N_l = Tr(B^l), l = 1..L, in exact integer arithmetic (index 0 unused, = 0).
std::vector<std::int64_t> reduced_cycle_counts(const Graph& g, int order);

}  // namespace qwzeta

#endif  // QWZETA_CYCLE_ZETA_HPP
