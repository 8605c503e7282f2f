#include <random>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "totdom/families.hpp"
#include "totdom/graph6.hpp"

using namespace totdom;

TEST_CASE("hand-encoded strings decode") {
  // 'B' = 3 vertices; 'w' = 119 - 63 = 56 = 111000: x(0,1) x(0,2) x(1,2) all set
  CHECK(graph6_decode("Bw") == gen_complete(3));
  // 'g' = 40 = 101000: x(0,1) = 1, x(0,2) = 0, x(1,2) = 1
  CHECK(graph6_decode("Bg") == Graph::from_edges(3, {{0, 1}, {1, 2}}));
  CHECK(graph6_decode("?") == Graph(0));
  CHECK(graph6_decode("@") == Graph(1));
  CHECK(graph6_decode("A_") == gen_complete(2));
  CHECK(graph6_decode(">>graph6<<Bw") == gen_complete(3));
}

TEST_CASE("encode matches known strings") {
  CHECK(graph6_encode(gen_complete(3)) == "Bw");
  CHECK(graph6_encode(gen_complete(4)) == "C~");
  CHECK(graph6_encode(Graph(0)) == "?");
}

TEST_CASE("malformed input carries the byte offset") {
  auto offset_of = [](std::string_view s) -> long {
    try {
      graph6_decode(s);
    } catch (const Graph6Error& e) {
      return static_cast<long>(e.offset());
    }
    return -1;
  };
  CHECK(offset_of("") == 0);
  CHECK(offset_of("B") == 1);          // truncated
  CHECK(offset_of("Bww") == 2);        // trailing byte
  CHECK(offset_of("B w") == 1);        // byte 32
  CHECK(offset_of("B\x7f") == 1);      // byte 127
  CHECK(offset_of("~?@?") == 0);       // multi-byte header
  CHECK(offset_of("Bx") == 1);         // padding bit set
  CHECK(offset_of(">>graph6<<B") == 11);
}

TEST_CASE("encode refuses order above 62") {
  CHECK_NOTHROW(graph6_encode(Graph(62)));
  CHECK_THROWS_AS(graph6_encode(Graph(63)), GraphError);
}

TEST_CASE("agrees with the networkx encoder on connected graphs of order 5") {
  const auto rows = testing::read_lines(testing::data_path("atlas_connected5_edges.txt"));
  REQUIRE(rows.size() == 21);
  for (const auto& row : rows) {
    const auto tab = row.find('\t');
    const auto code = row.substr(0, tab);
    std::vector<Edge> edges;
    std::istringstream in(row.substr(tab + 1));
    std::string pair;
    while (in >> pair) {
      const auto dash = pair.find('-');
      edges.emplace_back(std::stoi(pair.substr(0, dash)), std::stoi(pair.substr(dash + 1)));
    }
    const auto g = graph6_decode(code);
    CHECK(g == Graph::from_edges(5, edges));
    CHECK(graph6_encode(g) == code);
  }
}

TEST_CASE("property: decode inverts encode") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = rng() % 63;
    const auto g = testing::random_graph(n, 0.3, rng);
    const auto code = graph6_encode(g);
    CHECK(graph6_decode(code) == g);
    CHECK(code.size() == 1 + (n * (n > 0 ? n - 1 : 0) / 2 + 5) / 6);
  }
}

TEST_CASE("stream reader keeps line numbers and strips headers") {
  std::istringstream in(">>graph6<<Bw\r\n\nBg\n>>graph6<<\n");
  const auto lines = read_graph6_lines(in);
  REQUIRE(lines.size() == 4);
  CHECK(lines[0].text == "Bw");
  CHECK(lines[1].text.empty());
  CHECK(lines[2].line_number == 3);
  CHECK(lines[2].text == "Bg");
  CHECK(lines[3].text.empty());
}
