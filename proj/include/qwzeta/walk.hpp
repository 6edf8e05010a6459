#ifndef QWZETA_WALK_HPP
#define QWZETA_WALK_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "qwzeta/graph.hpp"
#include "qwzeta/linalg.hpp"

namespace qwzeta {

enum class IsometryLabel { kOriginGrover, kTerminalGrover, kSymmetricArc, kCustom, kRandom };

std::string_view to_string(IsometryLabel label);

/// p x 2m matrix d with d d* = I_p. Its row count is the multiplicity of the
/// coin eigenvalue a in a d*d + b (I - d*d).
class Isometry {
 public:
  Isometry(CMatrix d, IsometryLabel label, double tol = 1e-12);

  const CMatrix& matrix() const { return d_; }
  int rows() const { return static_cast<int>(d_.rows()); }
  int arc_dim() const { return static_cast<int>(d_.cols()); }
  IsometryLabel label() const { return label_; }

  /// d* d, the orthogonal projection of rank rows().
  CMatrix projector() const { return d_.adjoint() * d_; }

 private:
  CMatrix d_;
  IsometryLabel label_;
};

struct CoinParams {
  Complex a{1.0, 0.0};
  Complex b{-1.0, 0.0};

  Complex c() const { return a - b; }
};

/// Throws InvalidParameter unless |a| = |b| = 1 within tol.
void require_unit_modulus(const CoinParams& params, double tol = 1e-12);

enum class WalkKind { kShiftCoin, kTwoCoin };

/// U = S C (shift-coin) or U = C1 C2 (two-coin).
struct WalkSpec {
  WalkKind kind;
  Isometry d1;
  CoinParams p1;
  std::optional<Isometry> d2;
  CoinParams p2;
  bool strict_unitary = true;

  static WalkSpec shift_coin(Isometry d, CoinParams p, bool strict_unitary = true);
  static WalkSpec two_coin(Isometry d1, CoinParams p1, Isometry d2, CoinParams p2, bool strict_unitary = true);

  /// The two-coin form of this walk. A shift-coin walk S C is rewritten as
  /// C1 C2 with C1 = S expressed as a coin over the symmetric-arc isometry.
  WalkSpec as_two_coin(const Graph& g) const;
};

/// Normalized amplitude vector over arcs.
class WalkState {
 public:
  explicit WalkState(CVector amplitudes, double tol = 1e-10);
  static WalkState basis(int dim, int arc);

  const CVector& amplitudes() const { return psi_; }
  std::vector<double> probabilities() const;

 private:
  CVector psi_;
};

struct EvolutionResult {
  WalkState state;
  std::vector<double> probabilities;
};

/// Arc-inversion permutation: S(e, e^-1) = 1.
CMatrix shift_matrix(const Graph& g);

/// Row v: 1/sqrt(deg v) on arcs leaving v.
Isometry origin_grover_isometry(const Graph& g);

/// Row v: 1/sqrt(deg v) on arcs entering v. Equals origin * S.
Isometry terminal_grover_isometry(const Graph& g);

/// m rows (e_{2j} + e_{2j+1})/sqrt(2); with a = 1, b = -1 its coin is S.
Isometry symmetric_arc_isometry(const Graph& g);

/// p orthonormal rows in C^{dim}, from seeded Gaussian rows.
Isometry random_isometry(int p, int dim, std::uint64_t seed);
Isometry random_isometry(int p, const Graph& g, std::uint64_t seed);

/// a d*d + b (I - d*d)
CMatrix coin_operator(const Isometry& d, const CoinParams& params);

CMatrix evolution(const Graph& g, const WalkSpec& spec);

/// psi_t = U^t psi_0.
EvolutionResult evolve_state(const CMatrix& u, const WalkState& psi0, int steps);

}  // namespace qwzeta

#endif  // QWZETA_WALK_HPP
