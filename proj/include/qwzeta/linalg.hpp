#ifndef QWZETA_LINALG_HPP
#define QWZETA_LINALG_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <initializer_list>
#include <string>
#include <vector>

#include "qwzeta/errors.hpp"

namespace qwzeta {

using Complex = std::complex<double>;
/// Working precision for coefficient recurrences. Faddeev-LeVerrier loses
/// roughly log10(max |coefficient|) digits, so the recurrences run here and
/// results are rounded back to Complex.
using ExtendedComplex = std::complex<long double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Dense univariate polynomial c0 + c1 x + ... with exact-zero trailing trim.
template <typename Scalar>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Scalar> coeffs) : c_(coeffs) { trim(); }
  explicit Polynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(Scalar value) { return Polynomial({value}); }
  /// c0 + c1 x
  static Polynomial linear(Scalar c0, Scalar c1) { return Polynomial({c0, c1}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Scalar>& coefficients() const { return c_; }
  Scalar coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Scalar(0); }

  Scalar operator()(const Scalar& x) const {
    Scalar acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Scalar& s) {
    for (auto& x : c_) x *= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
  friend Polynomial operator*(const Scalar& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Scalar> out(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(out));
  }

  Polynomial pow(int k) const {
    Polynomial out = constant(Scalar(1));
    for (int i = 0; i < k; ++i) out = out * *this;
    return out;
  }

  /// Coefficients reversed within a length-(n+1) window: x^n p(1/x).
  Polynomial reversed(int n) const {
    std::vector<Scalar> out(n + 1, Scalar(0));
    for (int k = 0; k <= degree(); ++k) out[n - k] = c_[k];
    return Polynomial(std::move(out));
  }

  template <typename To>
  Polynomial<To> cast() const {
    std::vector<To> out;
    out.reserve(c_.size());
    for (const auto& x : c_) out.push_back(static_cast<To>(x));
    return Polynomial<To>(std::move(out));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == Scalar(0)) c_.pop_back();
  }
  std::vector<Scalar> c_;
};

using ComplexPolynomial = Polynomial<Complex>;

/// Truncated power series c0 + ... + cL u^L; arithmetic is exact modulo u^{L+1}.
template <typename Scalar>
class PowerSeries {
 public:
  explicit PowerSeries(int order = 0) : c_(order + 1, Scalar(0)) {}
  PowerSeries(std::vector<Scalar> coeffs, int order) : c_(std::move(coeffs)) { c_.resize(order + 1, Scalar(0)); }

  template <typename P>
  static PowerSeries from_polynomial(const Polynomial<P>& p, int order) {
    PowerSeries out(order);
    for (int k = 0; k <= order; ++k) out[k] = static_cast<Scalar>(p.coeff(k));
    return out;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  Scalar& operator[](int k) { return c_[k]; }
  const Scalar& operator[](int k) const { return c_[k]; }
  const std::vector<Scalar>& coefficients() const { return c_; }

  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) {
    for (int k = 0; k <= std::min(a.order(), b.order()); ++k) a[k] += b[k];
    return a;
  }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) {
    for (int k = 0; k <= std::min(a.order(), b.order()); ++k) a[k] -= b[k];
    return a;
  }
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    const int order = std::min(a.order(), b.order());
    PowerSeries out(order);
    for (int i = 0; i <= order; ++i)
      for (int j = 0; i + j <= order; ++j) out[i + j] += a[i] * b[j];
    return out;
  }

  /// 1/f; requires f[0] != 0.
  PowerSeries reciprocal() const {
    if (c_[0] == Scalar(0)) throw Error(ErrorKind::kBadSeriesBase, "reciprocal of a series with zero constant term");
    PowerSeries out(order());
    out[0] = Scalar(1) / c_[0];
    for (int k = 1; k <= order(); ++k) {
      Scalar acc(0);
      for (int j = 1; j <= k; ++j) acc += c_[j] * out[k - j];
      out[k] = -acc / c_[0];
    }
    return out;
  }

  template <typename To>
  PowerSeries<To> cast() const {
    std::vector<To> out;
    for (const auto& x : c_) out.push_back(static_cast<To>(x));
    return PowerSeries<To>(std::move(out), order());
  }

 private:
  std::vector<Scalar> c_;
};

using ComplexSeries = PowerSeries<Complex>;
using ExtendedPolynomial = Polynomial<ExtendedComplex>;
using ExtendedSeries = PowerSeries<ExtendedComplex>;

// ---------------------------------------------------------------------------
// Characteristic polynomials

/// det(lambda I - A) by the Faddeev-LeVerrier recurrence, carried out in the
/// scalar type of `a`. For integer matrices the divisions are exact.
template <typename Derived>
Polynomial<typename Derived::Scalar> faddeev_leverrier(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  if (a.rows() != a.cols()) {
    throw Error(ErrorKind::kDimensionMismatch, "characteristic polynomial of a non-square matrix");
  }
  const Eigen::Index n = a.rows();
  std::vector<Scalar> c(n + 1, Scalar(0));
  c[n] = Scalar(1);
  Mat am = Mat::Zero(n, n);
  Mat m(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    m = am;
    m.diagonal().array() += c[n - k + 1];
    am.noalias() = a * m;
    c[n - k] = -am.trace() / static_cast<Scalar>(k);
  }
  return Polynomial<Scalar>(std::move(c));
}

/// det(lambda I - M), leading coefficient 1. Computed in extended precision.
template <typename Derived>
ComplexPolynomial char_poly(const Eigen::MatrixBase<Derived>& m) {
  using Work = Eigen::Matrix<ExtendedComplex, Eigen::Dynamic, Eigen::Dynamic>;
  Work w = m.derived().template cast<ExtendedComplex>();
  return faddeev_leverrier(w).template cast<Complex>();
}

/// det(I - u M) as a polynomial in u: the reversed characteristic polynomial,
/// coefficient of u^k = (-1)^k e_k(eigenvalues). Constant term exactly 1.
template <typename Derived>
ExtendedPolynomial det_resolvent_poly_extended(const Eigen::MatrixBase<Derived>& m) {
  using Work = Eigen::Matrix<ExtendedComplex, Eigen::Dynamic, Eigen::Dynamic>;
  Work w = m.derived().template cast<ExtendedComplex>();
  return faddeev_leverrier(w).reversed(static_cast<int>(m.rows()));
}

template <typename Derived>
ComplexPolynomial det_resolvent_poly(const Eigen::MatrixBase<Derived>& m) {
  return det_resolvent_poly_extended(m).template cast<Complex>();
}

// ---------------------------------------------------------------------------
// Spectra

/// All eigenvalues with algebraic multiplicity, sorted by (re, im).
std::vector<Complex> eigenvalues(const CMatrix& m);

/// Eigenvalues of a Hermitian matrix (ascending); throws if `m` is not
/// Hermitian within `tol`.
std::vector<double> hermitian_eigenvalues(const CMatrix& m, double tol = 1e-10);

/// det(alpha(u) I - beta(u) K) = prod over mu in Spec K of (alpha - beta mu).
ComplexPolynomial affine_pencil_det(const ComplexPolynomial& alpha, const ComplexPolynomial& beta,
                                    const CMatrix& k);

struct MultisetMatch {
  double max_distance = 0.0;
  std::vector<std::pair<int, int>> pairs;
};

/// Greedy nearest pairing: repeatedly pair the globally closest remaining
/// elements. Throws DimensionMismatch on unequal sizes.
MultisetMatch match_multisets(const std::vector<Complex>& a, const std::vector<Complex>& b);

// ---------------------------------------------------------------------------
// Series

/// log p modulo u^{L+1}; p(0) must equal 1 within `tol`.
ComplexSeries series_log(const ComplexSeries& p, double tol = 1e-10);
ComplexSeries series_log(const ComplexPolynomial& p, int order, double tol = 1e-10);
/// Same in extended precision. The log of a polynomial whose roots sit on the
/// unit circle amplifies coefficient roundoff, so callers that need 1e-8 on
/// dense walks keep the whole chain extended.
ExtendedSeries series_log(const ExtendedSeries& p, double tol = 1e-10);

/// exp f modulo u^{L+1}.
ComplexSeries series_exp(const ComplexSeries& f);

// ---------------------------------------------------------------------------
// Comparison and exact division helpers

double max_coeff_deviation(const ComplexPolynomial& a, const ComplexPolynomial& b);
double max_coeff_deviation(const ComplexSeries& a, const ComplexSeries& b);

/// Polynomial quotient p / d; throws NumericalFailure if the remainder exceeds
/// tol * max(1, max |p_k|).
ComplexPolynomial divide_exact(const ComplexPolynomial& p, const ComplexPolynomial& d, double tol = 1e-8);

/// p * factor^k for any integer k (negative k divides exactly).
ComplexPolynomial times_power(const ComplexPolynomial& p, const ComplexPolynomial& factor, int k,
                              double tol = 1e-8);

/// max |M* M - I|
double unitarity_defect(const CMatrix& m);

/// Throws NumericalFailure if any entry is NaN or infinite.
void require_finite(const CMatrix& m, const std::string& what);

}  // namespace qwzeta

#endif  // QWZETA_LINALG_HPP
