#ifndef QWZETA_GRAPH_FILE_HPP
#define QWZETA_GRAPH_FILE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "qwzeta/crystal.hpp"
#include "qwzeta/graph.hpp"
#include "qwzeta/linalg.hpp"

namespace qwzeta {

// JSON graph description:
//   { "dim": d, "vertices": n | ["name", ...],
//     "edges": [ { "from": v, "to": w, "shift": [d integers] }, ... ] }
// "shift" is omitted iff dim = 0. Endpoints are indices, or names when the
// vertices are given as a list.
struct GraphFile {
  CrystalGraph crystal;
  std::vector<std::string> vertex_names;  // empty when given as a count

  int dim() const { return crystal.dim(); }
  /// The finite graph of a dim = 0 file. Throws DimensionMismatch otherwise.
  Graph graph() const { return crystal_to_graph(crystal); }

  bool operator==(const GraphFile& o) const { return crystal == o.crystal && vertex_names == o.vertex_names; }
};

/// Throws Parse with line:column for malformed JSON, and MalformedGraph naming
/// the offending edge for structural problems.
GraphFile parse_graph_file(std::string_view text, std::string_view source = "<input>");
GraphFile read_graph_file(const std::string& path);
std::string write_graph_file(const GraphFile& file);

GraphFile graph_file_from(const Graph& g);
GraphFile graph_file_from(const CrystalGraph& cg);

/// "re,im" or a bare real "re".
Complex parse_complex(std::string_view text);

}  // namespace qwzeta

#endif  // QWZETA_GRAPH_FILE_HPP
