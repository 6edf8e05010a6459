#ifndef QWZETA_GRAPH_HPP
#define QWZETA_GRAPH_HPP

#include <Eigen/Dense>
#include <utility>
#include <vector>

namespace qwzeta {

using Edge = std::pair<int, int>;

/// Finite simple graph with a canonical arc list.
///
/// Edge j = {u, v} (as given) yields arc 2j = (u -> v) and arc 2j+1 = (v -> u),
/// so the inverse of arc e is e ^ 1. Vertices are 0-based indices.
/// Disconnected graphs are constructible; zeta operations check connected().
class Graph {
 public:
  Graph(int n, std::vector<Edge> edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_arcs() const { return 2 * num_edges(); }
  const std::vector<Edge>& edges() const { return edges_; }

  int origin(int arc) const { return arc % 2 == 0 ? edges_[arc / 2].first : edges_[arc / 2].second; }
  int terminal(int arc) const { return arc % 2 == 0 ? edges_[arc / 2].second : edges_[arc / 2].first; }
  static int inverse(int arc) { return arc ^ 1; }

  int degree(int v) const { return degrees_[v]; }
  bool connected() const { return connected_; }

  /// Arcs leaving v, in increasing arc index.
  const std::vector<int>& out_arcs(int v) const { return out_arcs_[v]; }

  bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<int> degrees_;
  std::vector<std::vector<int>> out_arcs_;
  bool connected_;
};

struct DegreeData {
  Eigen::VectorXi degree;
  Eigen::MatrixXd adjacency;
  Eigen::MatrixXd degree_matrix;
};

/// Throws MalformedGraph on loops, duplicate edges or out-of-range vertices.
Graph build_graph(int n, const std::vector<Edge>& edges);

/// m - n + 1; throws NotConnected.
int betti_number(const Graph& g);

DegreeData adjacency_and_degree(const Graph& g);

void require_connected(const Graph& g);

// Named families used throughout the tests and CLI.
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);

}  // namespace qwzeta

#endif  // QWZETA_GRAPH_HPP
