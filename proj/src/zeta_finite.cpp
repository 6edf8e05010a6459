#include "qwzeta/zeta_finite.hpp"

#include <string>

namespace qwzeta {

std::string_view to_string(ZetaMethod method) {
  switch (method) {
    case ZetaMethod::kDirect: return "direct";
    case ZetaMethod::kShiftCoinFactored: return "shift-coin-factored";
    case ZetaMethod::kTwoCoinFactored: return "two-coin-factored";
  }
  return "unknown";
}

std::string_view to_string(SpectralClass cls) {
  switch (cls) {
    case SpectralClass::kQuadraticPair: return "quadratic-pair";
    case SpectralClass::kB1A2: return "b1a2";
    case SpectralClass::kB1B2: return "b1b2";
  }
  return "unknown";
}

std::vector<Complex> SpectrumReport::lambdas() const {
  std::vector<Complex> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.lambda);
  return out;
}

ZetaResult zeta_reciprocal_direct(const CMatrix& u) {
  if (u.rows() != u.cols()) throw Error(ErrorKind::kDimensionMismatch, "evolution matrix must be square");
  require_finite(u, "evolution matrix");
  return ZetaResult{det_resolvent_poly(u), ZetaMethod::kDirect, std::nullopt};
}

ZetaResult zeta_reciprocal_shift_coin(const Graph& g, const Isometry& d, const CoinParams& params) {
  if (d.arc_dim() != g.num_arcs()) {
    throw Error(ErrorKind::kDimensionMismatch, "isometry does not match the graph's arc count");
  }
  const Complex a = params.a;
  const Complex b = params.b;
  const int m = g.num_edges();
  const int q = d.rows();

  FactorData f;
  f.p = q;
  f.q = q;
  f.leading_exponent = m - q;
  f.pencil = d.matrix() * shift_matrix(g) * d.matrix().adjoint();

  const ComplexPolynomial alpha{Complex(1), Complex(0), -a * b};
  const ComplexPolynomial beta{Complex(0), params.c()};
  const ComplexPolynomial one_minus_b2u2{Complex(1), Complex(0), -b * b};
  ComplexPolynomial r = affine_pencil_det(alpha, beta, f.pencil);
  r = times_power(r, one_minus_b2u2, f.leading_exponent);
  return ZetaResult{std::move(r), ZetaMethod::kShiftCoinFactored, std::move(f)};
}

namespace {

/// Operands of a two-coin factorization after the optional swap, with p <= q.
struct TwoCoinSetup {
  const Isometry* d1;
  const Isometry* d2;
  CoinParams p1;
  CoinParams p2;
  int p;
  int q;
  int arc_dim;
  bool swapped;
  CMatrix pencil;
};

TwoCoinSetup prepare_two_coin(const Graph& g, const Isometry& d1, const Isometry& d2, const CoinParams& p1,
                              const CoinParams& p2, SwapPolicy policy) {
  if (d1.arc_dim() != g.num_arcs() || d2.arc_dim() != g.num_arcs()) {
    throw Error(ErrorKind::kDimensionMismatch, "isometries do not match the graph's arc count");
  }
  TwoCoinSetup s{&d1, &d2, p1, p2, d1.rows(), d2.rows(), g.num_arcs(), false, {}};
  if (s.q < s.p) {
    if (policy == SwapPolicy::kStrict) {
      throw Error(ErrorKind::kSwapOrFactor,
                  "q < p: exchange (d1, p1) and (d2, p2); det(I - u C1 C2) = det(I - u C2 C1)");
    }
    std::swap(s.d1, s.d2);
    std::swap(s.p1, s.p2);
    std::swap(s.p, s.q);
    s.swapped = true;
  }
  const CMatrix& m1 = s.d1->matrix();
  const CMatrix& m2 = s.d2->matrix();
  const CMatrix cross = m2 * m1.adjoint();  // q x p
  s.pencil = cross.adjoint() * cross;       // d1 d2* d2 d1*, Hermitian by construction
  return s;
}

}  // namespace

ZetaResult zeta_reciprocal_two_coin(const Graph& g, const Isometry& d1, const Isometry& d2, const CoinParams& p1,
                                    const CoinParams& p2, SwapPolicy policy) {
  TwoCoinSetup s = prepare_two_coin(g, d1, d2, p1, p2, policy);
  const Complex a1 = s.p1.a, b1 = s.p1.b, a2 = s.p2.a, b2 = s.p2.b;

  FactorData f;
  f.p = s.p;
  f.q = s.q;
  f.leading_exponent = s.arc_dim - s.p - s.q;
  f.middle_exponent = s.q - s.p;
  f.swapped = s.swapped;
  if (s.swapped) f.note = "coins exchanged so that p <= q";

  const ComplexPolynomial alpha = ComplexPolynomial::linear(1.0, -a1 * b2) * ComplexPolynomial::linear(1.0, -a2 * b1);
  const ComplexPolynomial beta = ComplexPolynomial::linear(0.0, s.p1.c() * s.p2.c());
  ComplexPolynomial r = affine_pencil_det(alpha, beta, s.pencil);
  r = r * ComplexPolynomial::linear(1.0, -a2 * b1).pow(f.middle_exponent);
  r = times_power(r, ComplexPolynomial::linear(1.0, -b1 * b2), f.leading_exponent);
  f.pencil = std::move(s.pencil);
  return ZetaResult{std::move(r), ZetaMethod::kTwoCoinFactored, std::move(f)};
}

ZetaResult zeta_reciprocal_factored(const Graph& g, const WalkSpec& spec, SwapPolicy policy) {
  if (spec.kind == WalkKind::kShiftCoin) return zeta_reciprocal_shift_coin(g, spec.d1, spec.p1);
  return zeta_reciprocal_two_coin(g, spec.d1, *spec.d2, spec.p1, spec.p2, policy);
}

ComplexPolynomial char_poly_two_coin(const Graph& g, const Isometry& d1, const Isometry& d2, const CoinParams& p1,
                                     const CoinParams& p2, SwapPolicy policy) {
  TwoCoinSetup s = prepare_two_coin(g, d1, d2, p1, p2, policy);
  const Complex a1 = s.p1.a, b1 = s.p1.b, a2 = s.p2.a, b2 = s.p2.b;
  const ComplexPolynomial alpha = ComplexPolynomial::linear(-a1 * b2, 1.0) * ComplexPolynomial::linear(-a2 * b1, 1.0);
  const ComplexPolynomial beta = ComplexPolynomial::linear(0.0, s.p1.c() * s.p2.c());
  ComplexPolynomial r = affine_pencil_det(alpha, beta, s.pencil);
  r = r * ComplexPolynomial::linear(-a2 * b1, 1.0).pow(s.q - s.p);
  return times_power(r, ComplexPolynomial::linear(-b1 * b2, 1.0), s.arc_dim - s.p - s.q);
}

SpectrumReport spectrum_two_coin(const Graph& g, const Isometry& d1, const Isometry& d2, const CoinParams& p1,
                                 const CoinParams& p2, SwapPolicy policy) {
  TwoCoinSetup s = prepare_two_coin(g, d1, d2, p1, p2, policy);
  const Complex a1 = s.p1.a, b1 = s.p1.b, a2 = s.p2.a, b2 = s.p2.b;
  const Complex c1c2 = s.p1.c() * s.p2.c();
  const Complex product = a1 * a2 * b1 * b2;

  SpectrumReport out;
  out.swapped = s.swapped;
  out.quadratic_count = 2 * s.p;
  out.b1a2_count = s.q - s.p;
  out.b1b2_count = s.arc_dim - s.p - s.q;

  std::vector<SpectralValue> quadratic;
  for (double mu : hermitian_eigenvalues(s.pencil)) {
    const Complex sum = a1 * b2 + a2 * b1 + c1c2 * mu;
    Complex disc = sum * sum - 4.0 * product;
    // A double root has a square-root conditioned discriminant; snap roundoff.
    if (std::abs(disc) <= 1e-13 * (std::norm(sum) + 4.0 * std::abs(product))) disc = 0.0;
    const Complex root = std::sqrt(disc);
    // Larger-magnitude root first, the other from the product of roots.
    const Complex big = (std::real(std::conj(sum) * root) >= 0.0 ? sum + root : sum - root) / 2.0;
    const Complex small = std::abs(big) > 0.0 ? product / big : Complex(0.0);
    quadratic.push_back({big, SpectralClass::kQuadraticPair, Complex(mu)});
    quadratic.push_back({small, SpectralClass::kQuadraticPair, Complex(mu)});
  }

  const Complex b1b2 = b1 * b2;
  for (int k = 0; k < -out.b1b2_count; ++k) {
    // p + q > 2m: the ranges of d1* and d2* intersect and each intersection
    // dimension turns one quadratic root into a cancelled b1b2.
    auto nearest = std::min_element(quadratic.begin(), quadratic.end(), [&](const auto& x, const auto& y) {
      return std::abs(x.lambda - b1b2) < std::abs(y.lambda - b1b2);
    });
    if (nearest == quadratic.end() || std::abs(nearest->lambda - b1b2) > 1e-6) {
      throw Error(ErrorKind::kNumericalFailure, "expected a cancelling b1b2 root among the quadratic pairs");
    }
    quadratic.erase(nearest);
  }

  out.values = std::move(quadratic);
  for (int k = 0; k < out.b1a2_count; ++k) out.values.push_back({a2 * b1, SpectralClass::kB1A2, Complex(0)});
  for (int k = 0; k < out.b1b2_count; ++k) out.values.push_back({b1b2, SpectralClass::kB1B2, Complex(0)});
  return out;
}

ComplexSeries log_zeta_series(const CMatrix& u, int order) {
  if (u.rows() != u.cols()) throw Error(ErrorKind::kDimensionMismatch, "evolution matrix must be square");
  if (order < 1) throw Error(ErrorKind::kInvalidParameter, "series order must be at least 1");
  ComplexSeries out(order);
  CMatrix power = CMatrix::Identity(u.rows(), u.cols());
  for (int k = 1; k <= order; ++k) {
    power = power * u;
    out[k] = power.trace() / static_cast<double>(k);
  }
  return out;
}

ComplexSeries log_det_series(const CMatrix& u, int order) {
  if (u.rows() != u.cols()) throw Error(ErrorKind::kDimensionMismatch, "evolution matrix must be square");
  if (order < 1) throw Error(ErrorKind::kInvalidParameter, "series order must be at least 1");
  const ExtendedSeries det = ExtendedSeries::from_polynomial(det_resolvent_poly_extended(u), order);
  return series_log(det).cast<Complex>();
}

}  // namespace qwzeta
