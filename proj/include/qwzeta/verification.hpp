#ifndef QWZETA_VERIFICATION_HPP
#define QWZETA_VERIFICATION_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qwzeta/graph.hpp"
#include "qwzeta/walk.hpp"
#include "qwzeta/zeta_periodic.hpp"

namespace qwzeta {

// Random instances are kept small: the coefficients of det(I - uU) for a
// 2m x 2m walk grow like binomial(2m, k), and binary64 roundoff in U and in
// the pencil grows with them. At m = 12 the worst factorization deviation is
// ~2e-9; at m = 14 it passes 1e-8.
inline constexpr int kMaxRandomEdges = 12;

/// Random connected simple graph: a random spanning tree plus extra edges,
/// with n in [2, nmax] and at most `max_edges` edges.
Graph random_connected_graph(std::mt19937_64& rng, int nmax, int max_edges = kMaxRandomEdges);

/// e^{i alpha}, e^{i beta} with uniform angles.
CoinParams random_unit_params(std::mt19937_64& rng);

/// Origin Grover, terminal Grover, or a random isometry with 1..n rows.
Isometry random_vertex_isometry(std::mt19937_64& rng, const Graph& g);

/// Seed of instance `index` in a run started from `seed` (splitmix64 mixing).
std::uint64_t instance_seed(std::uint64_t seed, int index);

struct CheckRecord {
  std::string identity;  // what was compared
  std::string anchor;    // the identity in formula form
  int instance = -1;     // -1 for fixed (non-random) cases
  std::string subject;   // graph / lattice description
  double deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  double seconds = 0.0;
  std::string detail;  // set when the check could not be evaluated
};

struct VerifyReport {
  std::vector<CheckRecord> records;
  bool all_pass() const;
  int failures() const;
};

enum class Suite { kFinite, kPeriodic, kAll };

struct VerifyOptions {
  Suite suite = Suite::kAll;
  int instances = 100;
  std::uint64_t seed = 1;
  int nmax = 8;
  int grid = 256;   // periodic quadrature points per dimension
  int threads = 0;  // 0: default_thread_count()
};

/// Randomized checks of every finite identity on one instance.
std::vector<CheckRecord> finite_instance_checks(std::uint64_t seed, int index, int nmax);

/// Periodic factorization, degeneration and fibered unitarity checks.
std::vector<CheckRecord> periodic_checks(int grid, int threads = 0);

VerifyReport run_verification(const VerifyOptions& options);

/// One line per record; timing only when asked so reports stay reproducible.
std::string format_report(const VerifyReport& report, bool timing = false);

}  // namespace qwzeta

#endif  // QWZETA_VERIFICATION_HPP
