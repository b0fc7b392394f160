#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "testutil.hpp"
#include "vertexenergy/catalog.hpp"
#include "vertexenergy/errors.hpp"
#include "vertexenergy/graph.hpp"
#include "vertexenergy/graph6.hpp"

using namespace vertexenergy;

TEST_CASE("graph construction") {
  const Graph k1(1, {});
  CHECK(k1.vertex_count() == 1);
  CHECK(k1.edge_count() == 0);

  const Graph k2(2, {{0, 1}});
  CHECK(k2.edge_count() == 1);
  CHECK(k2.has_edge(1, 0));

  const Graph k3(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(k3.edge_count() == 3);

  SUBCASE("edge order and duplicates are irrelevant") {
    const Graph a(4, {{2, 1}, {0, 3}, {1, 2}, {3, 0}, {1, 2}});
    const Graph b(4, {{0, 3}, {1, 2}});
    CHECK(a == b);
  }

  SUBCASE("rejects bad input") {
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), OutOfRangeError);
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), SelfLoopError);
    CHECK_THROWS_AS(Graph(0, {}), BadParametersError);
  }
}

TEST_CASE("degrees and regularity") {
  const Graph k2(2, {{0, 1}});
  CHECK(k2.degree(0) == 1);
  CHECK_THROWS_AS(k2.degree(2), OutOfRangeError);

  const Graph p3(3, {{0, 1}, {1, 2}});
  CHECK(p3.degree(1) == 2);
  CHECK_FALSE(p3.regular_degree().has_value());

  CHECK(Graph(1, {}).regular_degree() == 0);
  CHECK(named_graph(NamedGraphId::Shrikhande).regular_degree() == 6);
}

TEST_CASE("adjacency matrix") {
  const IntMatrix a2 = Graph(2, {{0, 1}}).adjacency_matrix();
  CHECK(a2(0, 0) == 0);
  CHECK(a2(0, 1) == 1);
  CHECK(a2(1, 0) == 1);

  const IntMatrix a1 = Graph(1, {}).adjacency_matrix();
  CHECK(a1(0, 0) == 0);

  const IntMatrix ap = named_graph(NamedGraphId::Petersen).adjacency_matrix();
  REQUIRE(ap.rows() == 10);
  for (std::size_t i = 0; i < 10; ++i) {
    std::int64_t row = 0;
    for (std::size_t j = 0; j < 10; ++j) row += ap(i, j);
    CHECK(row == 3);
  }
}

TEST_CASE("adjacency invariants over the random corpus") {
  for (const Graph& g : vetest::random_corpus(100)) {
    const IntMatrix a = g.adjacency_matrix();
    std::size_t degree_sum = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      CHECK(a(i, i) == 0);
      std::int64_t row = 0;
      for (std::size_t j = 0; j < a.cols(); ++j) {
        CHECK(a(i, j) == a(j, i));
        CHECK((a(i, j) == 0 || a(i, j) == 1));
        row += a(i, j);
      }
      CHECK(row == static_cast<std::int64_t>(g.degree(i)));
      degree_sum += g.degree(i);
    }
    CHECK(degree_sum == 2 * g.edge_count());
  }
}

TEST_CASE("graph6 reference encodings") {
  // Reference strings produced with an independent encoder.
  CHECK(write_graph6(Graph(1, {})) == "@");
  CHECK(write_graph6(Graph(2, {{0, 1}})) == "A_");
  CHECK(write_graph6(Graph(3, {{0, 1}, {1, 2}, {0, 2}})) == "Bw");
  CHECK(write_graph6(Graph(3, {{0, 1}, {1, 2}})) == "Bg");
  CHECK(write_graph6(named_graph(NamedGraphId::Petersen)) == "IheA@GUAo");
  CHECK(write_graph6(named_graph(NamedGraphId::Frucht)) == "KhCWKCBAH?w@");

  CHECK(parse_graph6("@") == Graph(1, {}));
  CHECK(parse_graph6("A_") == Graph(2, {{0, 1}}));
  CHECK(parse_graph6("Bw") == Graph(3, {{0, 1}, {1, 2}, {0, 2}}));
  CHECK(parse_graph6("A?") == Graph(2, {}));
}

TEST_CASE("graph6 extended header") {
  // Orders above 62 switch to the 4-byte header; reference: edgeless graph
  // on 63 vertices encodes as "~??~" + 326 '?' bytes.
  const Graph empty63(63, {});
  const std::string encoded = write_graph6(empty63);
  REQUIRE(encoded.size() == 330);
  CHECK(encoded.substr(0, 4) == "~??~");
  CHECK(encoded.find_first_not_of('?', 4) == std::string::npos);
  CHECK(parse_graph6(encoded) == empty63);

  const Graph one_edge(63, {{0, 1}});
  CHECK(write_graph6(one_edge).substr(0, 5) == "~??~_");
  CHECK(parse_graph6(write_graph6(one_edge)) == one_edge);
}

TEST_CASE("graph6 malformed input") {
  CHECK_THROWS_AS(parse_graph6(""), BadHeaderError);
  CHECK_THROWS_AS(parse_graph6(">"), BadHeaderError);     // header byte < 63
  CHECK_THROWS_AS(parse_graph6("B"), BadHeaderError);     // body missing
  CHECK_THROWS_AS(parse_graph6("A_ "), TrailingDataError);
  CHECK_THROWS_AS(parse_graph6("A_\n"), TrailingDataError);
  CHECK_THROWS_AS(parse_graph6("B\x01"), BadHeaderError);  // body byte out of range
  CHECK_THROWS_AS(parse_graph6("~?"), BadHeaderError);      // truncated extended header
  CHECK_THROWS_AS(parse_graph6("~~?????"), UnsupportedOrderError);
  CHECK_THROWS_AS(write_graph6(Graph(kMaxGraph6Order + 1, {})), UnsupportedOrderError);
}

TEST_CASE("graph6 round-trip on random graphs") {
  for (std::size_t i = 0; i < 100; ++i) {
    const std::size_t n = 1 + i % 8;
    const vertexenergy::Graph g =
        vetest::random_graph(0x60000000u + static_cast<std::uint32_t>(i), n, 0.4);
    CAPTURE(i);
    CHECK(parse_graph6(write_graph6(g)) == g);
  }
}
