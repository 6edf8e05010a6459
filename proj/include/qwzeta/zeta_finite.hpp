#ifndef QWZETA_ZETA_FINITE_HPP
#define QWZETA_ZETA_FINITE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qwzeta/graph.hpp"
#include "qwzeta/linalg.hpp"
#include "qwzeta/walk.hpp"

namespace qwzeta {

enum class ZetaMethod { kDirect, kShiftCoinFactored, kTwoCoinFactored };

std::string_view to_string(ZetaMethod method);

/// Exponents and pencil of a factored reciprocal zeta.
///
/// Shift-coin walks U = S C:
///   det(I - uU) = (1 - b^2 u^2)^{m-q} det((1 - ab u^2) I_q - c u d S d*)
/// Two-coin walks U = C1 C2 (p = rows d1 <= q = rows d2):
///   det(I - uU) = (1 - b1 b2 u)^{2m-p-q} (1 - a2 b1 u)^{q-p}
///                 det((1 - a1 b2 u)(1 - a2 b1 u) I_p - c1 c2 u K),  K = d1 d2* d2 d1*
struct FactorData {
  int p = 0;
  int q = 0;
  int leading_exponent = 0;  // m - q, or 2m - p - q
  int middle_exponent = 0;   // q - p for two-coin walks, 0 otherwise
  CMatrix pencil;
  bool swapped = false;  // the coins were exchanged so that p <= q
  std::string note;
};

/// Reciprocal zeta det(I - uU) with provenance.
struct ZetaResult {
  ComplexPolynomial reciprocal;
  ZetaMethod method = ZetaMethod::kDirect;
  std::optional<FactorData> factors;
};

enum class SwapPolicy {
  kAutoSwap,  // use det(I - u C1 C2) = det(I - u C2 C1) when q < p
  kStrict,    // throw SwapOrFactorError when q < p
};

enum class SpectralClass { kQuadraticPair, kB1A2, kB1B2 };

std::string_view to_string(SpectralClass cls);

struct SpectralValue {
  Complex lambda;
  SpectralClass cls;
  Complex mu;  // pencil eigenvalue for quadratic pairs, 0 otherwise
};

/// Closed-form spectrum of U = C1 C2 with multiplicity accounting.
/// The signed counts satisfy quadratic + b1a2 + b1b2 = 2m; when p + q > 2m the
/// b1b2 count is negative and that many b1b2 roots are cancelled from the
/// quadratic pairs.
struct SpectrumReport {
  std::vector<SpectralValue> values;
  int quadratic_count = 0;  // 2p
  int b1a2_count = 0;       // q - p
  int b1b2_count = 0;       // 2m - p - q
  bool swapped = false;

  std::vector<Complex> lambdas() const;
};

ZetaResult zeta_reciprocal_direct(const CMatrix& u);

ZetaResult zeta_reciprocal_shift_coin(const Graph& g, const Isometry& d, const CoinParams& params);

ZetaResult zeta_reciprocal_two_coin(const Graph& g, const Isometry& d1, const Isometry& d2,
                                    const CoinParams& p1, const CoinParams& p2,
                                    SwapPolicy policy = SwapPolicy::kAutoSwap);

/// Dispatch on the walk kind.
ZetaResult zeta_reciprocal_factored(const Graph& g, const WalkSpec& spec, SwapPolicy policy = SwapPolicy::kAutoSwap);

/// det(lambda I - C1 C2) in factored form:
/// (lambda - b1b2)^{2m-p-q} (lambda - a2b1)^{q-p} det((lambda - a1b2)(lambda - a2b1) I_p - c1c2 lambda K)
ComplexPolynomial char_poly_two_coin(const Graph& g, const Isometry& d1, const Isometry& d2, const CoinParams& p1,
                                     const CoinParams& p2, SwapPolicy policy = SwapPolicy::kAutoSwap);

/// Each mu in Spec K contributes the two roots of
/// lambda^2 - (a1b2 + a2b1 + c1c2 mu) lambda + a1a2b1b2.
SpectrumReport spectrum_two_coin(const Graph& g, const Isometry& d1, const Isometry& d2, const CoinParams& p1,
                                 const CoinParams& p2, SwapPolicy policy = SwapPolicy::kAutoSwap);

/// sum_{k=1..L} Tr(U^k) u^k / k, i.e. log det(I - uU)^{-1} truncated.
ComplexSeries log_zeta_series(const CMatrix& u, int order);

/// log det(I - uU) truncated at u^order, from the determinant coefficients
/// without leaving extended precision.
ComplexSeries log_det_series(const CMatrix& u, int order);

}  // namespace qwzeta

#endif  // QWZETA_ZETA_FINITE_HPP
