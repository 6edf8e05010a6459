#ifndef QWZETA_ZETA_PERIODIC_HPP
#define QWZETA_ZETA_PERIODIC_HPP

#include <functional>
#include <optional>

#include "qwzeta/crystal.hpp"
#include "qwzeta/linalg.hpp"
#include "qwzeta/walk.hpp"

namespace qwzeta {

// Bloch convention: a periodic function is f(x, g) = exp(i<theta, g>) f(x),
// and arc (e, g) runs from (o(e), g) to (t(e), g + shift(e)). Under it
//   A(theta)_{vw}      = sum over arcs e: v -> w of exp(i<theta, shift e>)
//   S(theta)_{e, e^-1} = exp(i<theta, shift e>)
//   origin Grover      : 1/sqrt(deg v) at arcs leaving v (no phase)
//   terminal Grover    : exp(-i<theta, shift e>)/sqrt(deg v) at arcs entering v
// so terminal = origin * S holds fiberwise, as on finite graphs.

using Theta = Eigen::VectorXd;

enum class FiberIsometry { kOriginGrover, kTerminalGrover };

/// Periodic walk built from the fibered Grover isometries.
struct PeriodicWalkSpec {
  WalkKind kind = WalkKind::kTwoCoin;
  FiberIsometry d1 = FiberIsometry::kOriginGrover;
  CoinParams p1{1.0, -1.0};
  FiberIsometry d2 = FiberIsometry::kTerminalGrover;
  CoinParams p2{1.0, -1.0};
  bool strict_unitary = true;
};

enum class FiberSpace { kVertex, kArc };

/// theta in [0, 2pi)^dim -> fiber matrix of a Gamma-periodic operator.
struct FiberFamily {
  int dim = 0;
  int size = 0;
  FiberSpace space = FiberSpace::kVertex;
  std::function<CMatrix(const Theta&)> eval;
};

struct GammaDetOptions {
  double branch_epsilon = 1e-6;
  std::optional<double> tolerance;  // QuadratureNotConverged if the estimate exceeds it
  int threads = 0;                  // 0: default_thread_count()
};

struct GammaDetResult {
  Complex value;
  Complex log_value;  // grid mean of tr Log F(theta)
  int grid = 0;
  double error_estimate = 0.0;  // |value - value on the nested half grid|
  double certificate = 0.0;     // min Re(lambda) over grid and fiber spectra
  double max_distance_from_one = 0.0;
  bool unit_disc_certified = false;  // every fiber eigenvalue in |z - 1| < 1
};

struct PeriodicZetaResult {
  Complex zeta;        // det_Gamma(I - uU)^{-1}
  Complex reciprocal;  // det_Gamma(I - uU)
  GammaDetResult det;
};

struct PeriodicFactoredResult {
  Complex reciprocal;  // prefactor * det_Gamma(vertex pencil)
  Complex prefactor;   // (1 + b2 u)^{exponent}
  int exponent = 0;    // Tr(I_R) - 2 Tr(I_V)
  GammaDetResult det;
};

struct PeriodicIharaResult {
  Complex zeta_from_edge_excess;     // (1-u^2)^{-(m-n)} det_Gamma(Delta)^{-1}
  Complex zeta_from_euler_char;      // [(1-u^2)^{-chi} det_Gamma(Delta)]^{-1}, as in the finite case
  double euler_characteristic = 0.0; // Tr(I_V) - Tr(I_E)
  GammaDetResult det;
};

inline constexpr double kDefaultUMax = 0.5;
inline constexpr int kDefaultGrid = 64;

CMatrix fiber_adjacency(const CrystalGraph& cg, const Theta& theta);
CMatrix fiber_shift(const CrystalGraph& cg, const Theta& theta);
CMatrix fiber_isometry(const CrystalGraph& cg, FiberIsometry kind, const Theta& theta);
CMatrix fiber_degree_matrix(const CrystalGraph& cg);
CMatrix fiber_walk_operator(const CrystalGraph& cg, const PeriodicWalkSpec& spec, const Theta& theta);

/// theta of flat grid index `index` on the N^dim uniform grid.
Theta grid_point(int index, int grid, int dim);
int grid_size(int grid, int dim);

FiberFamily identity_family(const CrystalGraph& cg, FiberSpace space);
FiberFamily adjacency_family(const CrystalGraph& cg);
FiberFamily walk_resolvent_family(const CrystalGraph& cg, const PeriodicWalkSpec& spec, Complex u);
/// (1 + a2 u)(1 - b2 u) I - 2 c2 u d2 d1* d1 d2*
FiberFamily vertex_pencil_family(const CrystalGraph& cg, const PeriodicWalkSpec& spec, Complex u);
/// I - u A + u^2 (D - I)
FiberFamily ihara_family(const CrystalGraph& cg, Complex u);

/// (2pi)^{-d} integral of tr F by the equal-weight periodic rule on N^d points.
Complex gamma_trace(const FiberFamily& fam, int grid);

/// exp of the grid mean of tr Log F(theta) (principal branch). Refuses with
/// BranchCutViolation unless every fiber eigenvalue has Re >= branch_epsilon.
GammaDetResult det_gamma(const FiberFamily& fam, int grid, const GammaDetOptions& options = {});

PeriodicZetaResult zeta_periodic_direct(const CrystalGraph& cg, const PeriodicWalkSpec& spec, Complex u,
                                        int grid = kDefaultGrid, double u_max = kDefaultUMax,
                                        const GammaDetOptions& options = {});

/// Factored reciprocal zeta for walks with a1 = 1, b1 = -1:
/// (1 + b2 u)^{Tr I_R - 2 Tr I_V} det_Gamma((1 + a2 u)(1 - b2 u) I_V - 2 c2 u d2 d1* d1 d2*).
PeriodicFactoredResult zeta_periodic_factored(const CrystalGraph& cg, const PeriodicWalkSpec& spec, Complex u,
                                              int grid = kDefaultGrid, double u_max = kDefaultUMax,
                                              const GammaDetOptions& options = {});

/// Periodic Ihara zeta in its two determinant forms.
PeriodicIharaResult ihara_periodic(const CrystalGraph& cg, Complex u, int grid = kDefaultGrid,
                                   const GammaDetOptions& options = {});

}  // namespace qwzeta

#endif  // QWZETA_ZETA_PERIODIC_HPP
