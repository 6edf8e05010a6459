#ifndef QWZETA_CRYSTAL_HPP
#define QWZETA_CRYSTAL_HPP

#include <Eigen/Dense>
#include <vector>

#include "qwzeta/graph.hpp"

namespace qwzeta {

/// Quotient edge with the lattice translation picked up when traversed from
/// `from` to `to`.
struct CrystalEdge {
  int from;
  int to;
  Eigen::VectorXi shift;

  bool operator==(const CrystalEdge& o) const { return from == o.from && to == o.to && shift == o.shift; }
};

/// Periodic graph with a free Z^d action, stored as its finite quotient.
///
/// The quotient may carry loops and parallel edges; the covering graph is
/// simple because no loop has zero shift and no two arcs with the same ordered
/// endpoints share a shift. Arc 2j runs from -> to with shift s, arc 2j+1 runs
/// back with -s. The action is free, so every stabilizer has order 1.
class CrystalGraph {
 public:
  CrystalGraph(int dim, int num_vertices, std::vector<CrystalEdge> edges);

  int dim() const { return dim_; }
  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_arcs() const { return 2 * num_edges(); }
  const std::vector<CrystalEdge>& edges() const { return edges_; }

  int origin(int arc) const { return arc % 2 == 0 ? edges_[arc / 2].from : edges_[arc / 2].to; }
  int terminal(int arc) const { return arc % 2 == 0 ? edges_[arc / 2].to : edges_[arc / 2].from; }
  Eigen::VectorXi shift(int arc) const { return arc % 2 == 0 ? edges_[arc / 2].shift : Eigen::VectorXi(-edges_[arc / 2].shift); }
  int degree(int v) const { return degrees_[v]; }

  int vertex_stabilizer_order(int) const { return 1; }
  int arc_stabilizer_order(int) const { return 1; }

  /// Sum over the vertex fundamental domain of 1/|Gamma_v|.
  double trace_identity_vertices() const;
  /// Sum over the arc fundamental domain of 1/|Gamma_e|.
  double trace_identity_arcs() const;

  bool operator==(const CrystalGraph& o) const { return dim_ == o.dim_ && n_ == o.n_ && edges_ == o.edges_; }

 private:
  int dim_;
  int n_;
  std::vector<CrystalEdge> edges_;
  std::vector<int> degrees_;
};

/// dim = 0 crystal of a finite simple graph.
CrystalGraph crystal_from_graph(const Graph& g);

/// Same quotient with every shift zero in Z^dim (a disjoint union of copies).
CrystalGraph trivial_shift_crystal(const Graph& g, int dim);

/// Finite graph of a dim = 0 crystal. Throws DimensionMismatch otherwise.
Graph crystal_to_graph(const CrystalGraph& cg);

// Standard lattices.
CrystalGraph integer_lattice();  // Z: one vertex, one loop with shift +1
CrystalGraph ladder_lattice();   // Z x K2
CrystalGraph square_lattice();   // Z^2: one vertex, two loops
CrystalGraph honeycomb_lattice();  // two vertices, three edges

}  // namespace qwzeta

#endif  // QWZETA_CRYSTAL_HPP
