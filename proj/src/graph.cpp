#include "qwzeta/graph.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "qwzeta/errors.hpp"

namespace qwzeta {

Graph::Graph(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)), degrees_(n, 0), out_arcs_(n), connected_(false) {
  if (n < 1) throw Error(ErrorKind::kMalformedGraph, "vertex count must be positive");
  std::set<Edge> seen;
  for (std::size_t j = 0; j < edges_.size(); ++j) {
    auto [a, b] = edges_[j];
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw Error(ErrorKind::kMalformedGraph, "edge " + std::to_string(j) + " has an out-of-range vertex");
    }
    if (a == b) throw Error(ErrorKind::kMalformedGraph, "edge " + std::to_string(j) + " is a loop");
    if (!seen.insert({std::min(a, b), std::max(a, b)}).second) {
      throw Error(ErrorKind::kMalformedGraph, "edge " + std::to_string(j) + " duplicates an earlier edge");
    }
  }
  for (int arc = 0; arc < num_arcs(); ++arc) {
    out_arcs_[origin(arc)].push_back(arc);
    ++degrees_[origin(arc)];
  }

  // Connectivity by depth-first search from vertex 0.
  std::vector<char> visited(n, 0);
  std::vector<int> stack{0};
  visited[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int arc : out_arcs_[v]) {
      int w = terminal(arc);
      if (!visited[w]) {
        visited[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  connected_ = reached == n;
}

Graph build_graph(int n, const std::vector<Edge>& edges) { return Graph(n, edges); }

void require_connected(const Graph& g) {
  if (!g.connected()) throw Error(ErrorKind::kNotConnected, "operation requires a connected graph");
}

int betti_number(const Graph& g) {
  require_connected(g);
  return g.num_edges() - g.num_vertices() + 1;
}

DegreeData adjacency_and_degree(const Graph& g) {
  const int n = g.num_vertices();
  DegreeData out;
  out.degree = Eigen::VectorXi::Zero(n);
  out.adjacency = Eigen::MatrixXd::Zero(n, n);
  for (int arc = 0; arc < g.num_arcs(); ++arc) {
    out.adjacency(g.origin(arc), g.terminal(arc)) = 1.0;
  }
  for (int v = 0; v < n; ++v) out.degree(v) = g.degree(v);
  out.degree_matrix = out.degree.cast<double>().asDiagonal();
  return out;
}

Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, edges);
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

}  // namespace qwzeta
