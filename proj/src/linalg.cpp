#include "qwzeta/linalg.hpp"

#include <numeric>
#include <tuple>

namespace qwzeta {

std::vector<Complex> eigenvalues(const CMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::kDimensionMismatch, "eigenvalues of a non-square matrix");
  require_finite(m, "eigenvalue input");
  std::vector<Complex> out;
  if (m.rows() == 0) return out;
  Eigen::ComplexEigenSolver<CMatrix> solver(m, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw Error(ErrorKind::kNumericalFailure, "eigensolver did not converge");
  const auto& ev = solver.eigenvalues();
  out.assign(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end(), [](const Complex& a, const Complex& b) {
    return std::make_tuple(a.real(), a.imag()) < std::make_tuple(b.real(), b.imag());
  });
  return out;
}

std::vector<double> hermitian_eigenvalues(const CMatrix& m, double tol) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::kDimensionMismatch, "eigenvalues of a non-square matrix");
  if (m.rows() == 0) return {};
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > tol * scale) {
    throw Error(ErrorKind::kNumericalFailure, "matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw Error(ErrorKind::kNumericalFailure, "eigensolver did not converge");
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

ComplexPolynomial affine_pencil_det(const ComplexPolynomial& alpha, const ComplexPolynomial& beta,
                                    const CMatrix& k) {
  if (k.rows() != k.cols()) throw Error(ErrorKind::kDimensionMismatch, "pencil matrix must be square");
  std::vector<Complex> spectrum;
  const double scale = std::max(1.0, k.rows() ? k.cwiseAbs().maxCoeff() : 0.0);
  if (k.rows() > 0 && (k - k.adjoint()).cwiseAbs().maxCoeff() <= 1e-12 * scale) {
    for (double mu : hermitian_eigenvalues(k, 1e-12)) spectrum.emplace_back(mu, 0.0);
  } else {
    spectrum = eigenvalues(k);
  }
  using ExtPoly = Polynomial<ExtendedComplex>;
  const ExtPoly a = alpha.cast<ExtendedComplex>();
  const ExtPoly b = beta.cast<ExtendedComplex>();
  ExtPoly out = ExtPoly::constant(ExtendedComplex(1));
  for (const Complex& mu : spectrum) out = out * (a - b * static_cast<ExtendedComplex>(mu));
  return out.cast<Complex>();
}

MultisetMatch match_multisets(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::kDimensionMismatch, "multisets differ in size");
  struct Candidate {
    double distance;
    int i;
    int j;
  };
  std::vector<Candidate> candidates;
  candidates.reserve(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      candidates.push_back({std::abs(a[i] - b[j]), static_cast<int>(i), static_cast<int>(j)});
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& x, const Candidate& y) {
    return std::tie(x.distance, x.i, x.j) < std::tie(y.distance, y.i, y.j);
  });
  std::vector<char> used_a(a.size(), 0), used_b(b.size(), 0);
  MultisetMatch out;
  for (const auto& c : candidates) {
    if (used_a[c.i] || used_b[c.j]) continue;
    used_a[c.i] = used_b[c.j] = 1;
    out.pairs.emplace_back(c.i, c.j);
    out.max_distance = std::max(out.max_distance, c.distance);
  }
  return out;
}

namespace {

template <typename Scalar>
PowerSeries<Scalar> log_impl(const PowerSeries<Scalar>& p, double tol) {
  using Real = typename Scalar::value_type;
  if (std::abs(p[0] - Scalar(1)) > tol) {
    throw Error(ErrorKind::kBadSeriesBase, "logarithm needs constant term 1");
  }
  const int order = p.order();
  // (log p)' = p'/p
  PowerSeries<Scalar> derivative(order);
  for (int k = 0; k < order; ++k) derivative[k] = static_cast<Real>(k + 1) * p[k + 1];
  PowerSeries<Scalar> quotient = derivative * p.reciprocal();
  PowerSeries<Scalar> out(order);
  out[0] = std::log(p[0]);
  for (int k = 1; k <= order; ++k) out[k] = quotient[k - 1] / static_cast<Real>(k);
  return out;
}

}  // namespace

ComplexSeries series_log(const ComplexSeries& p, double tol) { return log_impl(p, tol); }

ExtendedSeries series_log(const ExtendedSeries& p, double tol) { return log_impl(p, tol); }

ComplexSeries series_log(const ComplexPolynomial& p, int order, double tol) {
  return series_log(ComplexSeries::from_polynomial(p, order), tol);
}

ComplexSeries series_exp(const ComplexSeries& f) {
  const int order = f.order();
  ComplexSeries out(order);
  out[0] = std::exp(f[0]);
  for (int k = 1; k <= order; ++k) {
    Complex acc(0);
    for (int j = 1; j <= k; ++j) acc += static_cast<double>(j) * f[j] * out[k - j];
    out[k] = acc / static_cast<double>(k);
  }
  return out;
}

double max_coeff_deviation(const ComplexPolynomial& a, const ComplexPolynomial& b) {
  double out = 0.0;
  const int top = std::max(a.degree(), b.degree());
  for (int k = 0; k <= top; ++k) out = std::max(out, std::abs(a.coeff(k) - b.coeff(k)));
  return out;
}

double max_coeff_deviation(const ComplexSeries& a, const ComplexSeries& b) {
  double out = 0.0;
  for (int k = 0; k <= std::min(a.order(), b.order()); ++k) out = std::max(out, std::abs(a[k] - b[k]));
  return out;
}

ComplexPolynomial divide_exact(const ComplexPolynomial& p, const ComplexPolynomial& d, double tol) {
  if (d.is_zero()) throw Error(ErrorKind::kNumericalFailure, "division by the zero polynomial");
  if (p.degree() < d.degree()) {
    if (!p.is_zero()) throw Error(ErrorKind::kNumericalFailure, "polynomial is not divisible");
    return {};
  }
  using Ext = ExtendedComplex;
  std::vector<Ext> rem;
  for (const auto& x : p.coefficients()) rem.push_back(static_cast<Ext>(x));
  const int dd = d.degree();
  const Ext lead = static_cast<Ext>(d.coeff(dd));
  std::vector<Ext> quot(p.degree() - dd + 1, Ext(0));
  for (int k = p.degree() - dd; k >= 0; --k) {
    const Ext q = rem[k + dd] / lead;
    quot[k] = q;
    for (int j = 0; j <= dd; ++j) rem[k + j] -= q * static_cast<Ext>(d.coeff(j));
  }
  double scale = 1.0;
  for (const auto& x : p.coefficients()) scale = std::max(scale, std::abs(x));
  for (int k = 0; k < dd; ++k) {
    if (static_cast<double>(std::abs(rem[k])) > tol * scale) {
      throw Error(ErrorKind::kNumericalFailure, "polynomial is not divisible within tolerance");
    }
  }
  return Polynomial<Ext>(std::move(quot)).cast<Complex>();
}

ComplexPolynomial times_power(const ComplexPolynomial& p, const ComplexPolynomial& factor, int k, double tol) {
  if (k >= 0) return p * factor.pow(k);
  return divide_exact(p, factor.pow(-k), tol);
}

double unitarity_defect(const CMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::kDimensionMismatch, "unitarity of a non-square matrix");
  if (m.rows() == 0) return 0.0;
  return (m.adjoint() * m - CMatrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff();
}

void require_finite(const CMatrix& m, const std::string& what) {
  if (!m.allFinite()) throw Error(ErrorKind::kNumericalFailure, what + " has non-finite entries");
}

}  // namespace qwzeta
