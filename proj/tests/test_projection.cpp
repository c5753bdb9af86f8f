#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"
#include "netproj/errors.hpp"
#include "netproj/oracles.hpp"
#include "netproj/projection.hpp"

#include <random>
#include <set>

using namespace netproj;
using namespace netproj::testing;

TEST_CASE("full-chains projection of the fixture, depth 2") {
  Projection p = build_projection(g6(), 0, 2, ProjectionMode::FullChains);
  CHECK(to_bracket(p) == "0(1(2,4,5),3(2,4),4(1,2,3,5))");
  CHECK(p.root() == 0);
  CHECK(p.levels() == 3);
  CHECK(p.level_count(0) == 1);
  CHECK(p.level_count(1) == 3);
  CHECK(p.level_count(2) == 9);
  CHECK(p.level_vertices(1) == VertexSet{1, 3, 4});
  CHECK(p.level_vertices(2) == VertexSet{1, 2, 3, 5});
}

TEST_CASE("depth-1 projection is the neighborhood") {
  CHECK(to_bracket(build_projection(complete(3), 0, 1, ProjectionMode::FullChains)) == "0(1,2)");
}

TEST_CASE("shortest-only projection of a 6-ring") {
  Projection p = build_projection(ring(6), 0, 3, ProjectionMode::ShortestOnly);
  CHECK(p.level_vertices(1) == VertexSet{1, 5});
  CHECK(p.level_vertices(2) == VertexSet{2, 4});
  CHECK(p.level_vertices(3) == VertexSet{3});
  CHECK(p.first_level(3) == 3);
}

TEST_CASE("projection argument validation and node cap") {
  CHECK_THROWS_AS(build_projection(g6(), 6, 2, ProjectionMode::FullChains), validation_error);
  CHECK_THROWS_AS(build_projection(g6(), 0, -1, ProjectionMode::FullChains), validation_error);
  CHECK_THROWS_WITH_AS(build_projection(complete(9), 0, 8, ProjectionMode::FullChains, 100),
                       doctest::Contains("100"), resource_error);
}

TEST_CASE("bracket parsing reproduces the listed projections") {
  Projection p = parse_bracket("0(1(4),3(4),4(1,3))");
  CHECK(p.root() == 0);
  CHECK(p.levels() == 3);
  CHECK(to_bracket(p) == "0(1(4),3(4),4(1,3))");

  Projection p5 = parse_bracket("5(1(2,4),2(1,4),4(1,2))");
  CHECK(p5.root() == 5);
  CHECK(p5.nodes()[0].children.size() == 3);
  CHECK(p5.level_vertices(1) == VertexSet{1, 2, 4});

  // whitespace is insignificant, siblings canonicalize ascending
  CHECK(to_bracket(parse_bracket(" 0 ( 4 , 1 ) ")) == "0(1,4)");
}

TEST_CASE("bracket round trip on generated projections") {
  std::mt19937 rng(23);
  for (int i = 0; i < 60; ++i) {
    Graph g = er_graph(2 + i % 7, 0.5, rng);
    const Vertex root = static_cast<Vertex>(rng() % g.vertex_count());
    for (auto mode : {ProjectionMode::FullChains, ProjectionMode::ShortestOnly}) {
      Projection p = build_projection(g, root, 3, mode);
      Projection q = parse_bracket(to_bracket(p));
      CHECK(to_bracket(q) == to_bracket(p));
      CHECK(q.root() == p.root());
      CHECK(q.levels() == p.levels());
      for (int lvl = 0; lvl < p.levels(); ++lvl) {
        CHECK(q.level_count(lvl) == p.level_count(lvl));
        CHECK(q.level_vertices(lvl) == p.level_vertices(lvl));
      }
    }
  }
}

TEST_CASE("bracket parse errors carry offsets") {
  CHECK_THROWS_AS(parse_bracket(""), parse_error);
  CHECK_THROWS_AS(parse_bracket("0("), parse_error);
  CHECK_THROWS_AS(parse_bracket("0()"), parse_error);
  CHECK_THROWS_AS(parse_bracket("0(1,,2)"), parse_error);
  CHECK_THROWS_AS(parse_bracket("abc"), parse_error);
  CHECK_THROWS_AS(parse_bracket("0(1))"), parse_error);
  CHECK_THROWS_AS(parse_bracket("0(1)2"), parse_error);
  CHECK_THROWS_WITH_AS(parse_bracket("0(1()"), doctest::Contains("offset"), parse_error);
  CHECK_THROWS_AS(parse_bracket("0(1,1)"), validation_error);   // duplicate in a subset
  CHECK_THROWS_AS(parse_bracket("0(1(0))"), validation_error);  // chain repeats a vertex
}

TEST_CASE("vertex completeness equals the root eccentricity") {
  CHECK(vertex_complete_level(build_projection(g6(), 0, 2, ProjectionMode::FullChains), g6()) == 2);
  CHECK(vertex_complete_level(build_projection(g6(), 4, 1, ProjectionMode::FullChains), g6()) == 1);
  CHECK_FALSE(
      vertex_complete_level(build_projection(ring(6), 0, 1, ProjectionMode::FullChains), ring(6))
          .has_value());
}

TEST_CASE("edge completeness needs the parent-child incidences") {
  const Graph k3 = complete(3);
  Projection k3_d1 = build_projection(k3, 0, 1, ProjectionMode::FullChains);
  CHECK(vertex_complete_level(k3_d1, k3) == 1);
  CHECK_FALSE(is_edge_complete(k3_d1, k3));  // vertex-complete yet edge {1,2} unseen
  CHECK(is_edge_complete(build_projection(k3, 0, 2, ProjectionMode::FullChains), k3));

  // Depth 2 from vertex 0 never pairs 2 with 5 (both first occur at level 2),
  // so edge completeness arrives only at depth 3.
  CHECK_FALSE(is_edge_complete(build_projection(g6(), 0, 2, ProjectionMode::FullChains), g6()));
  CHECK(is_edge_complete(build_projection(g6(), 0, 3, ProjectionMode::FullChains), g6()));
}

TEST_CASE("edge completeness implies vertex completeness on small graphs") {
  for (int n = 2; n <= 5; ++n)
    for_each_graph(n, [&](const Graph& g) {
      for (Vertex root = 0; root < n; ++root) {
        Projection p = build_projection(g, root, n - 1, ProjectionMode::FullChains);
        if (is_edge_complete(p, g)) CHECK(vertex_complete_level(p, g).has_value());
      }
    });
}

TEST_CASE("metric operations on the fixtures") {
  CHECK(eccentricity(g6(), 4) == 1);
  CHECK(diameter(g6()) == 2);
  CHECK(distance(ring(6), 0, 3) == 3);
  CHECK(diameter(hypercube(3)) == 3);
  CHECK(diameter(Graph(1)) == 0);
}

TEST_CASE("metric operations reject disconnected graphs") {
  Graph split = from_edge_list("n=4\n0 1\n2 3");
  CHECK_THROWS_WITH_AS(distance(split, 0, 1), doctest::Contains("unreachable"),
                       validation_error);
  CHECK_THROWS_AS(eccentricity(split, 2), validation_error);
  CHECK_THROWS_AS(diameter(split), validation_error);
  CHECK_THROWS_AS(diameter(Graph(0)), validation_error);
}

TEST_CASE("multiplicities count simple chains per level") {
  Projection p = build_projection(g6(), 0, 2, ProjectionMode::FullChains);
  CHECK(multiplicity(p, 4) == std::vector<std::size_t>{0, 1, 2});
  CHECK(multiplicity(p, 0) == std::vector<std::size_t>{1, 0, 0});
  CHECK(multiplicity(p, 2) == std::vector<std::size_t>{0, 0, 3});
  CHECK_THROWS_AS(multiplicity(build_projection(g6(), 0, 2, ProjectionMode::ShortestOnly), 4),
                  unsupported_mode_error);
}

TEST_CASE("generated subsets equal neighborhood minus chain") {
  std::mt19937 rng(31);
  for (int i = 0; i < 40; ++i) {
    Graph g = er_graph(3 + i % 6, 0.5, rng);
    const Vertex root = static_cast<Vertex>(rng() % g.vertex_count());
    Projection p = build_projection(g, root, g.vertex_count() - 1, ProjectionMode::FullChains);
    for (std::size_t idx = 0; idx < p.node_count(); ++idx) {
      const auto& node = p.nodes()[idx];
      auto chain = p.chain_to(static_cast<int>(idx));
      VertexSet expected;
      for (Vertex w : g.neighbors(node.vertex))
        if (std::find(chain.begin(), chain.end(), w) == chain.end()) expected.push_back(w);
      VertexSet actual;
      for (int child : node.children)
        actual.push_back(p.nodes()[static_cast<std::size_t>(child)].vertex);
      if (node.level < p.depth()) CHECK(actual == expected);
      else CHECK(actual.empty());
    }
  }
}

TEST_CASE("both modes agree on first-occurrence levels") {
  for (int n = 1; n <= 5; ++n)
    for_each_graph(n, [&](const Graph& g) {
      for (Vertex root = 0; root < n; ++root) {
        Projection full = build_projection(g, root, n - 1, ProjectionMode::FullChains);
        Projection shortest = build_projection(g, root, n - 1, ProjectionMode::ShortestOnly);
        for (Vertex v = 0; v < n; ++v) CHECK(full.first_level(v) == shortest.first_level(v));
      }
    });
  std::mt19937 rng(37);
  for (int i = 0; i < 30; ++i) {
    const int n = 6 + i % 4;
    Graph g = er_graph(n, 0.4, rng);
    const Vertex root = static_cast<Vertex>(rng() % n);
    Projection full = build_projection(g, root, n - 1, ProjectionMode::FullChains);
    Projection shortest = build_projection(g, root, n - 1, ProjectionMode::ShortestOnly);
    for (Vertex v = 0; v < n; ++v) CHECK(full.first_level(v) == shortest.first_level(v));
  }
}

TEST_CASE("projection metrics match the reference oracle on small graphs") {
  for (int n = 1; n <= 5; ++n)
    for_each_graph(n, [&](const Graph& g) {
      auto dist = oracle::all_pairs_distances(g);
      for (Vertex root = 0; root < n; ++root) {
        Projection p = build_projection(g, root, n - 1, ProjectionMode::ShortestOnly);
        for (Vertex v = 0; v < n; ++v) {
          const int expected = dist[static_cast<std::size_t>(root)][static_cast<std::size_t>(v)];
          CHECK(p.first_level(v) == (expected == oracle::kUnreachable ? -1 : expected));
        }
      }
    });
}

TEST_CASE("per-vertex excess multiplicity stays within the level surplus") {
  std::mt19937 rng(41);
  for (int i = 0; i < 40; ++i) {
    Graph g = er_graph(3 + i % 6, 0.55, rng);
    const Vertex root = static_cast<Vertex>(rng() % g.vertex_count());
    Projection p = build_projection(g, root, g.vertex_count() - 1, ProjectionMode::FullChains);
    std::size_t occurrences = 0, distinct = 0;
    for (int lvl = 0; lvl < p.levels(); ++lvl) {
      occurrences += p.level_count(lvl);
      distinct += p.level_vertices(lvl).size();
    }
    const std::size_t surplus = occurrences - distinct;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      auto counts = multiplicity(p, v);
      for (int lvl = 0; lvl < p.levels(); ++lvl) {
        const std::size_t m = counts[static_cast<std::size_t>(lvl)];
        if (m == 0) continue;
        // per-level reading
        CHECK(m - 1 <= p.level_count(lvl) - p.level_vertices(lvl).size());
        // total reading
        CHECK(m - 1 <= surplus);
      }
    }
  }
}
