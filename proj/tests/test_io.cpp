#include <random>
#include <sstream>

#include "doctest.h"
#include "mcds/constructions.hpp"
#include "mcds/io.hpp"
#include "oracles.hpp"

using namespace mcds;

namespace {

Graph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) edges.emplace_back(i, j);
  }
  return make_graph(n, edges);
}

std::size_t count_substr(const std::string& s, const std::string& needle) {
  std::size_t count = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + needle.size())) ++count;
  return count;
}

}  // namespace

TEST_CASE("graph6 hand-decoded vectors") {
  CHECK(io::parse_graph6("C~") == complete(4));
  CHECK(io::parse_graph6("Bw") == complete(3));
  const auto k1 = io::parse_graph6("@");
  CHECK(k1.order() == 1);
  CHECK(k1.edge_count() == 0);

  CHECK(io::emit_graph6(complete(4)) == "C~");
  CHECK(io::emit_graph6(complete(3)) == "Bw");
  CHECK(io::emit_graph6(k1) == "@");
  CHECK(io::emit_graph6(make_graph(0, std::vector<Edge>{})) == "?");
}

TEST_CASE("graph6 column-major bit order") {
  // P3 0-1-2: bits x(0,1)=1 x(0,2)=0 x(1,2)=1 -> 101000 = 40 -> 'g'.
  CHECK(io::emit_graph6(make_graph(3, std::vector<Edge>{{0, 1}, {1, 2}})) == "Bg");
  // Single edge (0,2): 010000 = 16 -> 'O'.
  CHECK(io::parse_graph6("BO") == make_graph(3, std::vector<Edge>{{0, 2}}));
}

TEST_CASE("graph6 header and line endings") {
  CHECK(io::parse_graph6(">>graph6<<C~") == complete(4));
  CHECK(io::parse_graph6("C~\r\n") == complete(4));
}

TEST_CASE("graph6 errors carry offsets") {
  try {
    (void)io::parse_graph6("C~ ");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
  try {
    (void)io::parse_graph6("Bx");  // 111001: padding bits nonzero
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 1);
  }
  CHECK_THROWS_AS((void)io::parse_graph6("D~"), ParseError);  // n=5 needs 2 payload bytes
  CHECK_THROWS_AS((void)io::parse_graph6(""), ParseError);
  CHECK_THROWS_AS((void)io::parse_graph6("C~~"), ParseError);
  try {
    (void)io::parse_graph6(">>graph6<<C!");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 11);
  }
}

TEST_CASE("graph6 roundtrip on random graphs") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 500; ++i) {
    const auto g = testing::random_graph(rng() % 21, 0.4, rng);
    const auto back = io::parse_graph6(io::emit_graph6(g));
    CHECK(back.order() == g.order());
    CHECK(back == g);
  }
}

TEST_CASE("graph6 extended order form") {
  const auto g = composite({10, 3, false}).graph;  // 64 vertices
  const auto text = io::emit_graph6(g);
  CHECK(text.substr(0, 4) == "~?@?");  // 64 = 000000 000001 000000
  CHECK(io::parse_graph6(text) == g);
}

TEST_CASE("Graph6Reader skips blanks and the header line") {
  std::istringstream in(">>graph6<<\nC~\n\n  \nBw\n");
  io::Graph6Reader reader(in);
  auto first = reader.next();
  REQUIRE(first);
  CHECK(first->text == "C~");
  CHECK(first->line_number == 2);
  auto second = reader.next();
  REQUIRE(second);
  CHECK(second->text == "Bw");
  CHECK(second->line_number == 5);
  CHECK_FALSE(reader.next());
}

TEST_CASE("edge lists") {
  const auto p3 = io::parse_edge_list("3 2\n0 1\n1 2\n");
  CHECK(p3 == make_graph(3, std::vector<Edge>{{0, 1}, {1, 2}}));
  CHECK(io::parse_edge_list("  3   2 \n\n1\t0\n 2 1").edge_count() == 2);
  CHECK(io::emit_edge_list(make_graph(3, std::vector<Edge>{{2, 1}, {1, 0}})) == "3 2\n0 1\n1 2\n");

  try {
    (void)io::parse_edge_list("2 1\n0 2\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
  try {
    (void)io::parse_edge_list("3 2\n0 1\n1 x\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 3);
  }
  CHECK_THROWS_AS((void)io::parse_edge_list("3 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS((void)io::parse_edge_list("3 1\n0 0\n"), ParseError);

  std::mt19937_64 rng(8);
  for (int i = 0; i < 50; ++i) {
    const auto g = testing::random_graph(1 + rng() % 15, 0.3, rng);
    CHECK(io::parse_edge_list(io::emit_edge_list(g)) == g);
  }
}

TEST_CASE("DOT export") {
  const auto g4 = base_graph({4, true});
  const auto dot = io::emit_dot(g4.graph, std::span<const std::string>(g4.labels), "G4");
  CHECK(dot.starts_with("graph G4 {"));
  CHECK(count_substr(dot, " -- ") == 22);
  CHECK(count_substr(dot, "\n  \"z\";\n") == 1);

  const auto k1 = io::emit_dot(make_graph(1, std::vector<Edge>{}));
  CHECK(count_substr(k1, ";\n") == 1);
  CHECK(count_substr(k1, " -- ") == 0);

  const auto g33 = composite({3, 3, false});
  const auto dot33 = io::emit_dot(g33.graph, std::span<const std::string>(g33.labels));
  CHECK(count_substr(dot33, " -- ") == 36);
  CHECK(count_substr(dot33, "\"s\" -- \"x_{") == 9);
  CHECK(count_substr(dot33, "\n  \"z_3\";\n") == 1);
}

TEST_CASE("format detection") {
  CHECK(io::detect_format("C~\nBw\n") == io::Format::kGraph6);
  CHECK(io::detect_format(">>graph6<<C~\n") == io::Format::kGraph6);
  CHECK(io::detect_format("\n3 2\n0 1\n1 2\n") == io::Format::kEdgeList);
  CHECK_THROWS_AS((void)io::detect_format("12\n"), ParseError);
  CHECK_THROWS_AS((void)io::detect_format(""), ParseError);
  CHECK(io::read_graphs("C~\n\nBw\n").size() == 2);
}
