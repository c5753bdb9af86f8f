#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"
#include "netproj/errors.hpp"
#include "netproj/graph.hpp"

#include <random>

using namespace netproj;
using namespace netproj::testing;

TEST_CASE("from_edge_list builds small graphs") {
  Graph g = from_edge_list("0 1\n1 2");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(2, 1));
  CHECK_FALSE(g.has_edge(0, 2));
}

TEST_CASE("the six-vertex fixture has 6 vertices and 11 edges") {
  Graph g = g6();
  CHECK(g.vertex_count() == 6);
  CHECK(g.edge_count() == 11);
  CHECK(g.neighbors(4) == VertexSet{0, 1, 2, 3, 5});
  CHECK(g.neighbors(0) == VertexSet{1, 3, 4});
}

TEST_CASE("from_edge_list rejects self-loops and malformed lines") {
  CHECK_THROWS_AS(from_edge_list("0 0"), validation_error);
  CHECK_THROWS_AS(from_edge_list("0 1\nx 2"), parse_error);
  CHECK_THROWS_AS(from_edge_list("0 1 2"), parse_error);
  CHECK_THROWS_AS(from_edge_list("0 -1"), parse_error);
  CHECK_THROWS_WITH_AS(from_edge_list("0 1\n\n3"), doctest::Contains("line 3"), parse_error);
}

TEST_CASE("edge-list comments, duplicates and headers") {
  Graph g = from_edge_list("# comment\nn=5\n0 1 # trailing\n1 0\n");
  CHECK(g.vertex_count() == 5);
  CHECK(g.edge_count() == 1);
  CHECK(g.degree(4) == 0);
  CHECK_THROWS_AS(from_edge_list("n=x\n0 1"), parse_error);
}

TEST_CASE("to_edge_list is canonical and round-trips") {
  CHECK(to_edge_list(complete(3)) == "0 1\n0 2\n1 2\n");
  Graph with_isolated = from_edge_list("n=4\n0 1");
  CHECK(to_edge_list(with_isolated) == "n=4\n0 1\n");
  CHECK(from_edge_list(to_edge_list(with_isolated)) == with_isolated);

  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    Graph g = er_graph(1 + i % 9, 0.4, rng);
    CHECK(from_edge_list(to_edge_list(g)) == g);
  }
}

TEST_CASE("generators produce the expected structures") {
  Graph q3 = hypercube(3);
  CHECK(q3.vertex_count() == 8);
  CHECK(q3.edge_count() == 12);
  for (Vertex v = 0; v < 8; ++v) CHECK(q3.degree(v) == 3);

  Graph c6 = ring(6);
  CHECK(c6.vertex_count() == 6);
  CHECK(c6.edge_count() == 6);
  CHECK(c6.has_edge(5, 0));

  CHECK(complete(4).edge_count() == 6);

  Graph mesh = generate_topology(TopologyKind::Mesh, {2, 3});
  CHECK(mesh.vertex_count() == 6);
  CHECK(mesh.edge_count() == 7);
  CHECK(mesh.has_edge(0, 1));  // row-major: (0,0)-(0,1)
  CHECK(mesh.has_edge(0, 3));  // (0,0)-(1,0)

  Graph torus = generate_topology(TopologyKind::Torus, {3, 3});
  CHECK(torus.vertex_count() == 9);
  CHECK(torus.edge_count() == 18);
  for (Vertex v = 0; v < 9; ++v) CHECK(torus.degree(v) == 4);
}

TEST_CASE("generator parameter validation") {
  CHECK_THROWS_AS(generate_topology(TopologyKind::Ring, {2}), validation_error);
  CHECK_THROWS_AS(generate_topology(TopologyKind::Hypercube, {0}), validation_error);
  CHECK_THROWS_AS(generate_topology(TopologyKind::Mesh, {3, 0}), validation_error);
  CHECK_THROWS_AS(generate_topology(TopologyKind::Complete, {}), validation_error);
}

TEST_CASE("handshake holds on every generated topology") {
  std::vector<Graph> graphs = {ring(5), ring(9), complete(6), hypercube(4),
                               generate_topology(TopologyKind::Torus, {3, 4}),
                               generate_topology(TopologyKind::Mesh, {4, 4}),
                               generate_topology(TopologyKind::Torus, {2, 3, 4})};
  for (const Graph& g : graphs) {
    std::size_t degree_sum = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      degree_sum += static_cast<std::size_t>(g.degree(v));
    CHECK(degree_sum == 2 * g.edge_count());
  }
}

TEST_CASE("remove_vertices keeps ids and drops incident edges") {
  Graph k4_minus = remove_vertices(complete(4), {3});
  CHECK(k4_minus == complete(3));

  Graph g = remove_vertices(g6(), {4});
  CHECK(g.vertex_count() == 6);
  CHECK(to_edge_list(g) == "n=6\n0 1\n0 3\n1 2\n1 5\n2 3\n2 5\n");

  CHECK(remove_vertices(g6(), {}) == g6());
  CHECK_THROWS_AS(remove_vertices(g6(), {6}), validation_error);
}

TEST_CASE("remove_vertices keeps exactly the edges avoiding the fault set") {
  std::mt19937 rng(11);
  for (int i = 0; i < 40; ++i) {
    Graph g = er_graph(7, 0.5, rng);
    VertexSet f;
    for (Vertex v = 0; v < 7; ++v)
      if (rng() % 3 == 0) f.push_back(v);
    Graph h = remove_vertices(g, f);
    for (auto [u, v] : g.edges()) {
      const bool kept = !std::binary_search(f.begin(), f.end(), u) &&
                        !std::binary_search(f.begin(), f.end(), v);
      CHECK(h.has_edge(u, v) == kept);
    }
    for (auto [u, v] : h.edges()) CHECK(g.has_edge(u, v));
  }
}

TEST_CASE("graph constructor validates edges") {
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), validation_error);
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), validation_error);
  Graph g(3, {{0, 1}, {1, 0}, {0, 1}});
  CHECK(g.edge_count() == 1);
}
