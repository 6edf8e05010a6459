#include "qwzeta/walk.hpp"

#include <random>
#include <string>

namespace qwzeta {

std::string_view to_string(IsometryLabel label) {
  switch (label) {
    case IsometryLabel::kOriginGrover: return "origin-grover";
    case IsometryLabel::kTerminalGrover: return "terminal-grover";
    case IsometryLabel::kSymmetricArc: return "symmetric-arc";
    case IsometryLabel::kCustom: return "custom";
    case IsometryLabel::kRandom: return "random";
  }
  return "unknown";
}

Isometry::Isometry(CMatrix d, IsometryLabel label, double tol) : d_(std::move(d)), label_(label) {
  require_finite(d_, "isometry");
  if (d_.rows() > d_.cols()) {
    throw Error(ErrorKind::kDimensionMismatch, "isometry has more rows than arcs");
  }
  const CMatrix gram = d_ * d_.adjoint();
  const double defect = (gram - CMatrix::Identity(d_.rows(), d_.rows())).cwiseAbs().maxCoeff();
  if (d_.rows() > 0 && defect > tol) {
    throw Error(ErrorKind::kNumericalFailure, "d d* != I (defect " + std::to_string(defect) + ")");
  }
}

void require_unit_modulus(const CoinParams& params, double tol) {
  if (std::abs(std::abs(params.a) - 1.0) > tol || std::abs(std::abs(params.b) - 1.0) > tol) {
    throw Error(ErrorKind::kInvalidParameter,
                "coin parameters must have unit modulus (use the non-unitary override to explore)");
  }
}

WalkSpec WalkSpec::shift_coin(Isometry d, CoinParams p, bool strict_unitary) {
  if (strict_unitary) require_unit_modulus(p);
  return WalkSpec{WalkKind::kShiftCoin, std::move(d), p, std::nullopt, CoinParams{}, strict_unitary};
}

WalkSpec WalkSpec::two_coin(Isometry d1, CoinParams p1, Isometry d2, CoinParams p2, bool strict_unitary) {
  if (d1.arc_dim() != d2.arc_dim()) {
    throw Error(ErrorKind::kDimensionMismatch, "isometries act on different arc spaces");
  }
  if (strict_unitary) {
    require_unit_modulus(p1);
    require_unit_modulus(p2);
  }
  return WalkSpec{WalkKind::kTwoCoin, std::move(d1), p1, std::move(d2), p2, strict_unitary};
}

WalkSpec WalkSpec::as_two_coin(const Graph& g) const {
  if (kind == WalkKind::kTwoCoin) return *this;
  return two_coin(symmetric_arc_isometry(g), CoinParams{1.0, -1.0}, d1, p1, strict_unitary);
}

WalkState::WalkState(CVector amplitudes, double tol) : psi_(std::move(amplitudes)) {
  if (!psi_.allFinite() || std::abs(psi_.norm() - 1.0) > tol) {
    throw Error(ErrorKind::kBadState, "walk state must have unit norm");
  }
}

WalkState WalkState::basis(int dim, int arc) {
  if (arc < 0 || arc >= dim) throw Error(ErrorKind::kDimensionMismatch, "basis arc out of range");
  CVector psi = CVector::Zero(dim);
  psi(arc) = 1.0;
  return WalkState(std::move(psi));
}

std::vector<double> WalkState::probabilities() const {
  std::vector<double> out(psi_.size());
  for (Eigen::Index k = 0; k < psi_.size(); ++k) out[k] = std::norm(psi_(k));
  return out;
}

CMatrix shift_matrix(const Graph& g) {
  const int dim = g.num_arcs();
  CMatrix s = CMatrix::Zero(dim, dim);
  for (int e = 0; e < dim; ++e) s(e, Graph::inverse(e)) = 1.0;
  return s;
}

namespace {

Isometry grover(const Graph& g, bool at_origin) {
  const int n = g.num_vertices();
  CMatrix d = CMatrix::Zero(n, g.num_arcs());
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == 0) throw Error(ErrorKind::kMalformedGraph, "isolated vertex " + std::to_string(v));
  }
  for (int e = 0; e < g.num_arcs(); ++e) {
    const int v = at_origin ? g.origin(e) : g.terminal(e);
    d(v, e) = 1.0 / std::sqrt(static_cast<double>(g.degree(v)));
  }
  return Isometry(std::move(d), at_origin ? IsometryLabel::kOriginGrover : IsometryLabel::kTerminalGrover);
}

}  // namespace

Isometry origin_grover_isometry(const Graph& g) { return grover(g, true); }

Isometry terminal_grover_isometry(const Graph& g) { return grover(g, false); }

Isometry symmetric_arc_isometry(const Graph& g) {
  const int m = g.num_edges();
  CMatrix d = CMatrix::Zero(m, 2 * m);
  const double w = 1.0 / std::sqrt(2.0);
  for (int j = 0; j < m; ++j) {
    d(j, 2 * j) = w;
    d(j, 2 * j + 1) = w;
  }
  return Isometry(std::move(d), IsometryLabel::kSymmetricArc);
}

Isometry random_isometry(int p, int dim, std::uint64_t seed) {
  if (p < 1 || p > dim) {
    throw Error(ErrorKind::kDimensionMismatch,
                "random isometry needs 1 <= p <= arc dimension (p=" + std::to_string(p) + ")");
  }
  constexpr int kAttempts = 8;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::mt19937_64 rng(seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(attempt));
    std::normal_distribution<double> normal(0.0, 1.0);
    CMatrix columns(dim, p);
    for (int j = 0; j < p; ++j)
      for (int i = 0; i < dim; ++i) {
        const double re = normal(rng);
        const double im = normal(rng);
        columns(i, j) = Complex(re, im);
      }
    Eigen::HouseholderQR<CMatrix> qr(columns);
    const CMatrix r = qr.matrixQR().topLeftCorner(p, p).triangularView<Eigen::Upper>();
    const double rmax = r.diagonal().cwiseAbs().maxCoeff();
    const double rmin = r.diagonal().cwiseAbs().minCoeff();
    if (rmin <= 1e-8 * rmax) continue;
    CMatrix q = qr.householderQ() * CMatrix::Identity(dim, p);
    return Isometry(q.adjoint(), IsometryLabel::kRandom);
  }
  throw Error(ErrorKind::kNumericalFailure, "random rows stayed rank deficient after 8 attempts");
}

Isometry random_isometry(int p, const Graph& g, std::uint64_t seed) {
  return random_isometry(p, g.num_arcs(), seed);
}

CMatrix coin_operator(const Isometry& d, const CoinParams& params) {
  const CMatrix proj = d.projector();
  const Eigen::Index dim = proj.rows();
  return params.a * proj + params.b * (CMatrix::Identity(dim, dim) - proj);
}

CMatrix evolution(const Graph& g, const WalkSpec& spec) {
  const int dim = g.num_arcs();
  if (spec.d1.arc_dim() != dim || (spec.d2 && spec.d2->arc_dim() != dim)) {
    throw Error(ErrorKind::kDimensionMismatch, "walk isometries do not match the graph's arc count");
  }
  if (spec.kind == WalkKind::kShiftCoin) return shift_matrix(g) * coin_operator(spec.d1, spec.p1);
  return coin_operator(spec.d1, spec.p1) * coin_operator(*spec.d2, spec.p2);
}

EvolutionResult evolve_state(const CMatrix& u, const WalkState& psi0, int steps) {
  if (u.rows() != u.cols() || u.cols() != psi0.amplitudes().size()) {
    throw Error(ErrorKind::kDimensionMismatch, "state and evolution matrix disagree in dimension");
  }
  if (steps < 0) throw Error(ErrorKind::kInvalidParameter, "step count must be non-negative");
  CVector psi = psi0.amplitudes();
  for (int t = 0; t < steps; ++t) psi = u * psi;
  // Unitary evolution keeps the norm at 1; a non-unitary U is reported as BadState.
  WalkState state(std::move(psi), 1e-9);
  auto probs = state.probabilities();
  return {std::move(state), std::move(probs)};
}

}  // namespace qwzeta
