#include "qwzeta/crystal.hpp"

#include <set>
#include <string>
#include <tuple>

#include "qwzeta/errors.hpp"

namespace qwzeta {

CrystalGraph::CrystalGraph(int dim, int num_vertices, std::vector<CrystalEdge> edges)
    : dim_(dim), n_(num_vertices), edges_(std::move(edges)), degrees_(num_vertices, 0) {
  if (dim < 0) throw Error(ErrorKind::kMalformedGraph, "lattice rank must be non-negative");
  if (num_vertices < 1) throw Error(ErrorKind::kMalformedGraph, "vertex count must be positive");
  std::set<std::tuple<int, int, std::vector<int>>> arcs;
  for (std::size_t j = 0; j < edges_.size(); ++j) {
    const auto& e = edges_[j];
    const std::string where = "edge " + std::to_string(j);
    if (e.from < 0 || e.to < 0 || e.from >= n_ || e.to >= n_) {
      throw Error(ErrorKind::kMalformedGraph, where + " has an out-of-range vertex");
    }
    if (e.shift.size() != dim) {
      throw Error(ErrorKind::kMalformedGraph, where + " shift length differs from the lattice rank");
    }
    if (e.from == e.to && e.shift.isZero()) {
      throw Error(ErrorKind::kMalformedGraph, where + " is a zero-shift loop (covering graph not simple)");
    }
    const std::vector<int> fwd(e.shift.data(), e.shift.data() + dim);
    std::vector<int> bwd(fwd);
    for (int& x : bwd) x = -x;
    if (!arcs.insert({e.from, e.to, fwd}).second || !arcs.insert({e.to, e.from, bwd}).second) {
      throw Error(ErrorKind::kMalformedGraph, where + " duplicates an arc (covering graph not simple)");
    }
  }
  for (int arc = 0; arc < num_arcs(); ++arc) ++degrees_[origin(arc)];
}

double CrystalGraph::trace_identity_vertices() const {
  double out = 0.0;
  for (int v = 0; v < n_; ++v) out += 1.0 / vertex_stabilizer_order(v);
  return out;
}

double CrystalGraph::trace_identity_arcs() const {
  double out = 0.0;
  for (int e = 0; e < num_arcs(); ++e) out += 1.0 / arc_stabilizer_order(e);
  return out;
}

CrystalGraph crystal_from_graph(const Graph& g) { return trivial_shift_crystal(g, 0); }

CrystalGraph trivial_shift_crystal(const Graph& g, int dim) {
  std::vector<CrystalEdge> edges;
  for (const auto& [a, b] : g.edges()) edges.push_back({a, b, Eigen::VectorXi::Zero(dim)});
  return CrystalGraph(dim, g.num_vertices(), std::move(edges));
}

Graph crystal_to_graph(const CrystalGraph& cg) {
  if (cg.dim() != 0) throw Error(ErrorKind::kDimensionMismatch, "only a rank-0 crystal is a finite graph");
  std::vector<Edge> edges;
  for (const auto& e : cg.edges()) edges.emplace_back(e.from, e.to);
  return Graph(cg.num_vertices(), std::move(edges));
}

namespace {

Eigen::VectorXi vec(std::initializer_list<int> xs) {
  Eigen::VectorXi out(static_cast<Eigen::Index>(xs.size()));
  int k = 0;
  for (int x : xs) out(k++) = x;
  return out;
}

}  // namespace

CrystalGraph integer_lattice() { return CrystalGraph(1, 1, {{0, 0, vec({1})}}); }

CrystalGraph ladder_lattice() { return CrystalGraph(1, 2, {{0, 1, vec({0})}, {0, 0, vec({1})}, {1, 1, vec({1})}}); }

CrystalGraph square_lattice() { return CrystalGraph(2, 1, {{0, 0, vec({1, 0})}, {0, 0, vec({0, 1})}}); }

CrystalGraph honeycomb_lattice() {
  return CrystalGraph(2, 2, {{0, 1, vec({0, 0})}, {0, 1, vec({1, 0})}, {0, 1, vec({0, 1})}});
}

}  // namespace qwzeta
