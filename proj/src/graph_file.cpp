#include "qwzeta/graph_file.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "qwzeta/errors.hpp"

namespace qwzeta {

namespace {

using json = nlohmann::json;

std::string position(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return std::to_string(line) + ":" + std::to_string(column);
}

int vertex_ref(const json& ref, int n, const std::map<std::string, int>& names, const std::string& where) {
  if (ref.is_number_integer()) {
    const auto v = ref.get<long long>();
    if (v < 0 || v >= n) throw Error(ErrorKind::kMalformedGraph, where + " refers to a vertex out of range");
    return static_cast<int>(v);
  }
  if (ref.is_string()) {
    auto it = names.find(ref.get<std::string>());
    if (it == names.end()) throw Error(ErrorKind::kMalformedGraph, where + " names an unknown vertex");
    return it->second;
  }
  throw Error(ErrorKind::kMalformedGraph, where + " endpoint must be an index or a vertex name");
}

}  // namespace

GraphFile parse_graph_file(std::string_view text, std::string_view source) {
  const std::string src(source);
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::kParse, src + ":" + position(text, e.byte) + ": invalid JSON");
  }
  if (!doc.is_object()) throw Error(ErrorKind::kParse, src + ": top level must be an object");

  if (!doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<int>() < 0) {
    throw Error(ErrorKind::kMalformedGraph, src + ": \"dim\" must be a non-negative integer");
  }
  const int dim = doc["dim"].get<int>();

  if (!doc.contains("vertices")) throw Error(ErrorKind::kMalformedGraph, src + ": missing \"vertices\"");
  const json& vs = doc["vertices"];
  int n = 0;
  std::vector<std::string> names;
  std::map<std::string, int> index;
  if (vs.is_number_integer()) {
    n = vs.get<int>();
  } else if (vs.is_array()) {
    for (const auto& name : vs) {
      if (!name.is_string()) throw Error(ErrorKind::kMalformedGraph, src + ": vertex names must be strings");
      if (!index.emplace(name.get<std::string>(), static_cast<int>(names.size())).second) {
        throw Error(ErrorKind::kMalformedGraph, src + ": duplicate vertex name \"" + name.get<std::string>() + "\"");
      }
      names.push_back(name.get<std::string>());
    }
    n = static_cast<int>(names.size());
  } else {
    throw Error(ErrorKind::kMalformedGraph, src + ": \"vertices\" must be a count or a list of names");
  }
  if (n < 1) throw Error(ErrorKind::kMalformedGraph, src + ": a graph needs at least one vertex");

  if (!doc.contains("edges") || !doc["edges"].is_array()) {
    throw Error(ErrorKind::kMalformedGraph, src + ": \"edges\" must be a list");
  }
  std::vector<CrystalEdge> edges;
  const json& es = doc["edges"];
  for (std::size_t j = 0; j < es.size(); ++j) {
    const std::string where = src + ": edge " + std::to_string(j);
    const json& e = es[j];
    if (!e.is_object() || !e.contains("from") || !e.contains("to")) {
      throw Error(ErrorKind::kMalformedGraph, where + " needs \"from\" and \"to\"");
    }
    CrystalEdge ce{vertex_ref(e["from"], n, index, where), vertex_ref(e["to"], n, index, where),
                   Eigen::VectorXi::Zero(dim)};
    if (dim > 0) {
      if (!e.contains("shift")) throw Error(ErrorKind::kMalformedGraph, where + " is missing \"shift\"");
      const json& s = e["shift"];
      if (!s.is_array() || static_cast<int>(s.size()) != dim) {
        throw Error(ErrorKind::kMalformedGraph, where + " shift must list " + std::to_string(dim) + " integers");
      }
      for (int k = 0; k < dim; ++k) {
        if (!s[k].is_number_integer()) throw Error(ErrorKind::kMalformedGraph, where + " shift must be integers");
        ce.shift(k) = s[k].get<int>();
      }
    } else if (e.contains("shift") && !(e["shift"].is_array() && e["shift"].empty())) {
      throw Error(ErrorKind::kMalformedGraph, where + " has a shift but dim is 0");
    }
    edges.push_back(std::move(ce));
  }

  if (dim == 0) {
    // Finite graphs follow the simple-graph rules; reuse their validation.
    std::vector<Edge> plain;
    for (const auto& e : edges) plain.emplace_back(e.from, e.to);
    try {
      build_graph(n, plain);
    } catch (const Error& err) {
      throw Error(err.kind(), src + ": " + err.detail());
    }
  }
  try {
    return GraphFile{CrystalGraph(dim, n, std::move(edges)), std::move(names)};
  } catch (const Error& err) {
    throw Error(err.kind(), src + ": " + err.detail());
  }
}

GraphFile read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParse, path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph_file(buf.str(), path);
}

std::string write_graph_file(const GraphFile& file) {
  const CrystalGraph& cg = file.crystal;
  json doc;
  doc["dim"] = cg.dim();
  if (file.vertex_names.empty()) {
    doc["vertices"] = cg.num_vertices();
  } else {
    doc["vertices"] = file.vertex_names;
  }
  json edges = json::array();
  for (const auto& e : cg.edges()) {
    json je;
    if (file.vertex_names.empty()) {
      je["from"] = e.from;
      je["to"] = e.to;
    } else {
      je["from"] = file.vertex_names[e.from];
      je["to"] = file.vertex_names[e.to];
    }
    if (cg.dim() > 0) je["shift"] = std::vector<int>(e.shift.data(), e.shift.data() + e.shift.size());
    edges.push_back(std::move(je));
  }
  doc["edges"] = std::move(edges);
  return doc.dump(2) + "\n";
}

GraphFile graph_file_from(const Graph& g) { return GraphFile{crystal_from_graph(g), {}}; }

GraphFile graph_file_from(const CrystalGraph& cg) { return GraphFile{cg, {}}; }

Complex parse_complex(std::string_view text) {
  auto number = [&](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    double x = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
      throw Error(ErrorKind::kParse, "cannot read complex number \"" + std::string(text) + "\" (expected re,im)");
    }
    return x;
  };
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) return {number(text), 0.0};
  return {number(text.substr(0, comma)), number(text.substr(comma + 1))};
}

}  // namespace qwzeta
