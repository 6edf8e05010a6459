#include "qwzeta/zeta_periodic.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include "qwzeta/parallel.hpp"

namespace qwzeta {

namespace {

Complex phase(const Theta& theta, const Eigen::VectorXi& shift) {
  if (theta.size() == 0) return Complex(1.0, 0.0);
  const double angle = theta.dot(shift.cast<double>());
  return std::polar(1.0, angle);
}

void require_theta(const CrystalGraph& cg, const Theta& theta) {
  if (theta.size() != cg.dim()) throw Error(ErrorKind::kDimensionMismatch, "momentum has the wrong dimension");
}

Complex ipow(Complex base, int k) {
  Complex out(1.0, 0.0);
  const Complex factor = k >= 0 ? base : 1.0 / base;
  for (int i = 0; i < std::abs(k); ++i) out *= factor;
  return out;
}

CMatrix fiber_coin(const CrystalGraph& cg, FiberIsometry kind, const CoinParams& params, const Theta& theta) {
  const CMatrix d = fiber_isometry(cg, kind, theta);
  const CMatrix proj = d.adjoint() * d;
  const Eigen::Index dim = proj.rows();
  return params.a * proj + params.b * (CMatrix::Identity(dim, dim) - proj);
}

void check_spec(const PeriodicWalkSpec& spec) {
  if (!spec.strict_unitary) return;
  require_unit_modulus(spec.p1);
  if (spec.kind == WalkKind::kTwoCoin) require_unit_modulus(spec.p2);
}

struct PointData {
  Complex log_trace{0.0, 0.0};
  double min_re = 0.0;
  Complex worst_lambda{0.0, 0.0};
  double max_distance_from_one = 0.0;
};

PointData evaluate_point(const FiberFamily& fam, const Theta& theta) {
  const CMatrix f = fam.eval(theta);
  if (f.rows() != fam.size || f.cols() != fam.size) {
    throw Error(ErrorKind::kDimensionMismatch, "fiber matrix size differs from the family's declared size");
  }
  PointData out;
  out.min_re = std::numeric_limits<double>::infinity();
  auto visit = [&](const Complex& lambda) {
    out.log_trace += std::log(lambda);
    if (lambda.real() < out.min_re) {
      out.min_re = lambda.real();
      out.worst_lambda = lambda;
    }
    out.max_distance_from_one = std::max(out.max_distance_from_one, std::abs(lambda - 1.0));
  };
  if (fam.size == 1) {
    visit(f(0, 0));
  } else {
    Eigen::ComplexEigenSolver<CMatrix> solver(f, false);
    if (solver.info() != Eigen::Success) throw Error(ErrorKind::kNumericalFailure, "fiber eigensolver failed");
    for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) visit(solver.eigenvalues()(k));
  }
  return out;
}

bool all_even(int index, int grid, int dim) {
  for (int k = 0; k < dim; ++k) {
    if ((index % grid) % 2 != 0) return false;
    index /= grid;
  }
  return true;
}

std::string format_theta(const Theta& theta) {
  std::ostringstream os;
  os << "(";
  for (Eigen::Index k = 0; k < theta.size(); ++k) os << (k ? ", " : "") << theta(k);
  os << ")";
  return os.str();
}

}  // namespace

CMatrix fiber_adjacency(const CrystalGraph& cg, const Theta& theta) {
  require_theta(cg, theta);
  CMatrix a = CMatrix::Zero(cg.num_vertices(), cg.num_vertices());
  for (int e = 0; e < cg.num_arcs(); ++e) a(cg.origin(e), cg.terminal(e)) += phase(theta, cg.shift(e));
  return a;
}

CMatrix fiber_shift(const CrystalGraph& cg, const Theta& theta) {
  require_theta(cg, theta);
  CMatrix s = CMatrix::Zero(cg.num_arcs(), cg.num_arcs());
  for (int e = 0; e < cg.num_arcs(); ++e) s(e, e ^ 1) = phase(theta, cg.shift(e));
  return s;
}

CMatrix fiber_isometry(const CrystalGraph& cg, FiberIsometry kind, const Theta& theta) {
  require_theta(cg, theta);
  CMatrix d = CMatrix::Zero(cg.num_vertices(), cg.num_arcs());
  for (int v = 0; v < cg.num_vertices(); ++v) {
    if (cg.degree(v) == 0) throw Error(ErrorKind::kMalformedGraph, "isolated vertex " + std::to_string(v));
  }
  for (int e = 0; e < cg.num_arcs(); ++e) {
    if (kind == FiberIsometry::kOriginGrover) {
      const int v = cg.origin(e);
      d(v, e) = 1.0 / std::sqrt(static_cast<double>(cg.degree(v)));
    } else {
      const int v = cg.terminal(e);
      d(v, e) = std::conj(phase(theta, cg.shift(e))) / std::sqrt(static_cast<double>(cg.degree(v)));
    }
  }
  return d;
}

CMatrix fiber_degree_matrix(const CrystalGraph& cg) {
  CMatrix d = CMatrix::Zero(cg.num_vertices(), cg.num_vertices());
  for (int v = 0; v < cg.num_vertices(); ++v) d(v, v) = static_cast<double>(cg.degree(v));
  return d;
}

CMatrix fiber_walk_operator(const CrystalGraph& cg, const PeriodicWalkSpec& spec, const Theta& theta) {
  if (spec.kind == WalkKind::kShiftCoin) return fiber_shift(cg, theta) * fiber_coin(cg, spec.d1, spec.p1, theta);
  return fiber_coin(cg, spec.d1, spec.p1, theta) * fiber_coin(cg, spec.d2, spec.p2, theta);
}

int grid_size(int grid, int dim) {
  long long total = 1;
  for (int k = 0; k < dim; ++k) {
    total *= grid;
    if (total > (1LL << 30)) throw Error(ErrorKind::kLimitExceeded, "quadrature grid too large");
  }
  return static_cast<int>(total);
}

Theta grid_point(int index, int grid, int dim) {
  Theta theta(dim);
  for (int k = 0; k < dim; ++k) {
    theta(k) = 2.0 * std::numbers::pi * static_cast<double>(index % grid) / static_cast<double>(grid);
    index /= grid;
  }
  return theta;
}

FiberFamily identity_family(const CrystalGraph& cg, FiberSpace space) {
  const int size = space == FiberSpace::kVertex ? cg.num_vertices() : cg.num_arcs();
  return {cg.dim(), size, space, [size](const Theta&) { return CMatrix(CMatrix::Identity(size, size)); }};
}

FiberFamily adjacency_family(const CrystalGraph& cg) {
  return {cg.dim(), cg.num_vertices(), FiberSpace::kVertex,
          [cg](const Theta& theta) { return fiber_adjacency(cg, theta); }};
}

FiberFamily walk_resolvent_family(const CrystalGraph& cg, const PeriodicWalkSpec& spec, Complex u) {
  return {cg.dim(), cg.num_arcs(), FiberSpace::kArc, [cg, spec, u](const Theta& theta) {
            const CMatrix w = fiber_walk_operator(cg, spec, theta);
            return CMatrix(CMatrix::Identity(w.rows(), w.cols()) - u * w);
          }};
}

FiberFamily vertex_pencil_family(const CrystalGraph& cg, const PeriodicWalkSpec& spec, Complex u) {
  const Complex a2 = spec.p2.a, b2 = spec.p2.b, c2 = spec.p2.c();
  const Complex scalar = (1.0 + a2 * u) * (1.0 - b2 * u);
  return {cg.dim(), cg.num_vertices(), FiberSpace::kVertex, [cg, spec, u, scalar, c2](const Theta& theta) {
            const CMatrix d1 = fiber_isometry(cg, spec.d1, theta);
            const CMatrix d2 = fiber_isometry(cg, spec.d2, theta);
            const CMatrix cross = d1 * d2.adjoint();  // d1 d2*
            const CMatrix k = cross.adjoint() * cross;  // d2 d1* d1 d2*
            return CMatrix(scalar * CMatrix::Identity(k.rows(), k.cols()) - 2.0 * c2 * u * k);
          }};
}

FiberFamily ihara_family(const CrystalGraph& cg, Complex u) {
  const CMatrix dm = fiber_degree_matrix(cg);
  return {cg.dim(), cg.num_vertices(), FiberSpace::kVertex, [cg, dm, u](const Theta& theta) {
            const Eigen::Index n = dm.rows();
            return CMatrix(CMatrix::Identity(n, n) - u * fiber_adjacency(cg, theta) +
                           u * u * (dm - CMatrix::Identity(n, n)));
          }};
}

Complex gamma_trace(const FiberFamily& fam, int grid) {
  if (fam.dim > 0 && grid < 2) throw Error(ErrorKind::kInvalidParameter, "quadrature grid must be at least 2");
  const int total = grid_size(grid, fam.dim);
  Complex sum(0.0, 0.0);
  for (int i = 0; i < total; ++i) sum += fam.eval(grid_point(i, grid, fam.dim)).trace();
  return sum / static_cast<double>(total);
}

GammaDetResult det_gamma(const FiberFamily& fam, int grid, const GammaDetOptions& options) {
  if (fam.dim > 0 && grid < 2) throw Error(ErrorKind::kInvalidParameter, "quadrature grid must be at least 2");
  const int total = grid_size(grid, fam.dim);
  std::vector<PointData> points(total);
  parallel_for(total, options.threads,
               [&](int i) { points[i] = evaluate_point(fam, grid_point(i, grid, fam.dim)); });

  GammaDetResult out;
  out.grid = grid;
  out.certificate = std::numeric_limits<double>::infinity();
  int worst = 0;
  Complex sum(0.0, 0.0);
  Complex half_sum(0.0, 0.0);
  int half_count = 0;
  for (int i = 0; i < total; ++i) {
    const auto& pt = points[i];
    sum += pt.log_trace;
    if (fam.dim > 0 && grid % 2 == 0 && all_even(i, grid, fam.dim)) {
      half_sum += pt.log_trace;
      ++half_count;
    }
    if (pt.min_re < out.certificate) {
      out.certificate = pt.min_re;
      worst = i;
    }
    out.max_distance_from_one = std::max(out.max_distance_from_one, pt.max_distance_from_one);
  }
  if (!(out.certificate >= options.branch_epsilon)) {
    std::ostringstream os;
    os << "fiber eigenvalue " << points[worst].worst_lambda << " at theta="
       << format_theta(grid_point(worst, grid, fam.dim)) << " is within " << options.branch_epsilon
       << " of the left half-plane";
    throw Error(ErrorKind::kBranchCutViolation, os.str());
  }
  out.unit_disc_certified = out.max_distance_from_one < 1.0;
  out.log_value = sum / static_cast<double>(total);
  out.value = std::exp(out.log_value);

  if (fam.dim == 0) {
    out.error_estimate = 0.0;
  } else if (grid % 2 == 0) {
    out.error_estimate = std::abs(out.value - std::exp(half_sum / static_cast<double>(half_count)));
  } else {
    GammaDetOptions doubled = options;
    doubled.tolerance.reset();
    out.error_estimate = std::abs(out.value - det_gamma(fam, 2 * grid, doubled).value);
  }
  if (options.tolerance && out.error_estimate > *options.tolerance) {
    throw Error(ErrorKind::kQuadratureNotConverged,
                "error estimate " + std::to_string(out.error_estimate) + " exceeds tolerance at grid " +
                    std::to_string(grid));
  }
  return out;
}

PeriodicZetaResult zeta_periodic_direct(const CrystalGraph& cg, const PeriodicWalkSpec& spec, Complex u, int grid,
                                        double u_max, const GammaDetOptions& options) {
  check_spec(spec);
  if (std::abs(u) > u_max) throw Error(ErrorKind::kInvalidParameter, "|u| exceeds the admissible radius");
  PeriodicZetaResult out;
  out.det = det_gamma(walk_resolvent_family(cg, spec, u), grid, options);
  out.reciprocal = out.det.value;
  out.zeta = 1.0 / out.reciprocal;
  return out;
}

PeriodicFactoredResult zeta_periodic_factored(const CrystalGraph& cg, const PeriodicWalkSpec& spec, Complex u,
                                              int grid, double u_max, const GammaDetOptions& options) {
  check_spec(spec);
  if (spec.kind != WalkKind::kTwoCoin) {
    throw Error(ErrorKind::kHypothesisViolation, "factored periodic zeta needs a two-coin walk");
  }
  if (std::abs(spec.p1.a - 1.0) > 1e-12 || std::abs(spec.p1.b + 1.0) > 1e-12) {
    throw Error(ErrorKind::kHypothesisViolation, "factored periodic zeta needs a1 = 1 and b1 = -1 (C1^2 = I)");
  }
  if (std::abs(u) > u_max) throw Error(ErrorKind::kInvalidParameter, "|u| exceeds the admissible radius");
  PeriodicFactoredResult out;
  out.exponent = static_cast<int>(std::lround(cg.trace_identity_arcs() - 2.0 * cg.trace_identity_vertices()));
  out.prefactor = ipow(1.0 + spec.p2.b * u, out.exponent);
  out.det = det_gamma(vertex_pencil_family(cg, spec, u), grid, options);
  out.reciprocal = out.prefactor * out.det.value;
  return out;
}

PeriodicIharaResult ihara_periodic(const CrystalGraph& cg, Complex u, int grid, const GammaDetOptions& options) {
  PeriodicIharaResult out;
  out.det = det_gamma(ihara_family(cg, u), grid, options);
  const Complex one_minus_u2 = 1.0 - u * u;

  const int edge_excess = cg.num_edges() - cg.num_vertices();
  out.zeta_from_edge_excess = ipow(one_minus_u2, -edge_excess) / out.det.value;

  const double trace_v = gamma_trace(identity_family(cg, FiberSpace::kVertex), grid).real();
  const double trace_e = gamma_trace(identity_family(cg, FiberSpace::kArc), grid).real() / 2.0;
  out.euler_characteristic = trace_v - trace_e;
  out.zeta_from_euler_char = 1.0 / (std::pow(one_minus_u2, -out.euler_characteristic) * out.det.value);
  return out;
}

}  // namespace qwzeta
