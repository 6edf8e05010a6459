#include <doctest.h>

#include "qwzeta/graph_file.hpp"
#include "test_support.hpp"

using namespace qwzeta;
using qwzeta::testing::temp_file;
using qwzeta::testing::thrown_kind;

namespace {

std::string message_of(std::string_view text) {
  try {
    parse_graph_file(text, "g.json");
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("round trip of finite and periodic graphs") {
  for (const GraphFile& f : {graph_file_from(complete_graph(4)), graph_file_from(honeycomb_lattice()),
                             graph_file_from(square_lattice())}) {
    CHECK(parse_graph_file(write_graph_file(f)) == f);
  }
  const std::string path = temp_file("ladder.json", write_graph_file(graph_file_from(ladder_lattice())));
  CHECK(read_graph_file(path).crystal == ladder_lattice());
}

TEST_CASE("named vertices") {
  const GraphFile f = parse_graph_file(
      R"({"dim": 0, "vertices": ["x", "y", "z"], "edges": [{"from": "x", "to": "y"}, {"from": "z", "to": "y"}]})");
  CHECK(f.vertex_names == std::vector<std::string>{"x", "y", "z"});
  const Graph g = f.graph();
  CHECK(g.origin(2) == 2);
  CHECK(g.terminal(2) == 1);
  CHECK(parse_graph_file(write_graph_file(f)) == f);
  CHECK(message_of(R"({"dim": 0, "vertices": ["x", "x"], "edges": []})").find("duplicate vertex name") !=
        std::string::npos);
  CHECK(message_of(R"({"dim": 0, "vertices": ["x", "y"], "edges": [{"from": "x", "to": "w"}]})")
            .find("edge 0 names an unknown vertex") != std::string::npos);
}

TEST_CASE("malformed JSON reports line and column") {
  const std::string msg = message_of("{\n  \"dim\": 0,\n  \"vertices\": 3,\n  \"edges\": [ oops ]\n}");
  CHECK(msg.find("ParseError: g.json:4:") == 0);
  CHECK(thrown_kind([] { parse_graph_file("[1, 2]"); }) == ErrorKind::kParse);
  CHECK(thrown_kind([] { read_graph_file("/nonexistent/qwzeta.json"); }) == ErrorKind::kParse);
}

TEST_CASE("structural errors name the offending edge") {
  const std::string missing = message_of(
      R"({"dim": 1, "vertices": 2, "edges": [{"from": 0, "to": 1, "shift": [0]}, {"from": 1, "to": 0}]})");
  CHECK(missing == "MalformedGraph: g.json: edge 1 is missing \"shift\"");
  CHECK(message_of(R"({"dim": 2, "vertices": 1, "edges": [{"from": 0, "to": 0, "shift": [1]}]})")
            .find("edge 0 shift must list 2 integers") != std::string::npos);
  CHECK(message_of(R"({"dim": 1, "vertices": 1, "edges": [{"from": 0, "to": 0, "shift": [0]}]})")
            .find("zero-shift loop") != std::string::npos);
  CHECK(message_of(R"({"dim": 0, "vertices": 2, "edges": [{"from": 0, "to": 1, "shift": [1]}]})")
            .find("edge 0 has a shift but dim is 0") != std::string::npos);
  CHECK(message_of(R"({"dim": 0, "vertices": 2, "edges": [{"from": 0, "to": 2}]})").find("edge 0") !=
        std::string::npos);
  CHECK(message_of(R"({"vertices": 2, "edges": []})").find("\"dim\"") != std::string::npos);
}

TEST_CASE("finite files follow simple-graph rules") {
  CHECK(thrown_kind([] {
          parse_graph_file(R"({"dim": 0, "vertices": 2, "edges": [{"from": 0, "to": 1}, {"from": 1, "to": 0}]})");
        }) == ErrorKind::kMalformedGraph);
  CHECK(thrown_kind([] { parse_graph_file(R"({"dim": 0, "vertices": 1, "edges": [{"from": 0, "to": 0}]})"); }) ==
        ErrorKind::kMalformedGraph);
  const std::string msg = message_of(R"({"dim": 0, "vertices": 1, "edges": [{"from": 0, "to": 0}]})");
  CHECK(msg.rfind("MalformedGraph: g.json: ", 0) == 0);
  CHECK(msg.find("MalformedGraph", 1) == std::string::npos);
}

TEST_CASE("graph() refuses periodic files") {
  CHECK(thrown_kind([] { graph_file_from(square_lattice()).graph(); }) == ErrorKind::kDimensionMismatch);
}

TEST_CASE("parse_complex") {
  CHECK(parse_complex("0.5,-1.25") == Complex(0.5, -1.25));
  CHECK(parse_complex("2") == Complex(2.0, 0.0));
  CHECK(parse_complex(" 1e-3 , 4 ") == Complex(1e-3, 4.0));
  CHECK(thrown_kind([] { parse_complex("1,x"); }) == ErrorKind::kParse);
  CHECK(thrown_kind([] { parse_complex(""); }) == ErrorKind::kParse);
  CHECK(thrown_kind([] { parse_complex("1,2,3"); }) == ErrorKind::kParse);
}
