#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"
#include "netproj/clique.hpp"
#include "netproj/errors.hpp"
#include "netproj/faults.hpp"
#include "netproj/graph.hpp"

#include <random>

using namespace netproj;
using namespace netproj::testing;

TEST_CASE("single faults on the fixture") {
  FaultReport report = worst_case_density(g6(), 1, 1);
  CHECK(report.min_density == 3);
  CHECK(report.witness == VertexSet{1});
  CHECK(report.examined == 6);
  CHECK(report.delta == 1);
  CHECK(report.multiplicity == 1);
}

TEST_CASE("zero faults reduce to the plain density") {
  FaultReport report = worst_case_density(g6(), 1, 0);
  CHECK(report.min_density == 4);
  CHECK(report.witness.empty());
  CHECK(report.examined == 1);
  CHECK(worst_case_density(complete(4), 1, 1).min_density == 3);
}

TEST_CASE("fault argument validation") {
  CHECK_THROWS_AS(worst_case_density(g6(), 0, 1), validation_error);
  CHECK_THROWS_AS(worst_case_density(g6(), 1, 6), validation_error);
  CHECK_THROWS_AS(worst_case_density(g6(), 1, -1), validation_error);
  CHECK_THROWS_AS(worst_case_density(Graph(0), 1, 0), validation_error);
  CHECK_THROWS_WITH_AS(worst_case_density(ring(60), 1, 5), doctest::Contains("1000000"),
                       resource_error);
}

TEST_CASE("tolerance verdicts on the fixture") {
  ToleranceVerdict ok = is_fault_tolerant(g6(), 1, 3, 1);
  CHECK(ok.tolerant);
  CHECK_FALSE(ok.counterexample.has_value());
  CHECK(ok.examined == 6);

  ToleranceVerdict broken = is_fault_tolerant(g6(), 1, 4, 1);
  CHECK_FALSE(broken.tolerant);
  REQUIRE(broken.counterexample.has_value());
  CHECK(*broken.counterexample == VertexSet{1});
  CHECK(broken.examined == 2);  // {0} passes, {1} breaks
}

TEST_CASE("one processor always survives below full multiplicity") {
  for (const Graph& g : {g6(), ring(5), complete(4)})
    for (int f = 0; f < g.vertex_count(); ++f)
      CHECK(is_fault_tolerant(g, 1, 1, f).tolerant);
}

TEST_CASE("worst case is monotone in the multiplicity") {
  std::mt19937 rng(97);
  for (int i = 0; i < 20; ++i) {
    Graph g = er_graph(7, 0.5, rng);
    int previous = delta_density(g, 1).size;
    CHECK(worst_case_density(g, 1, 0).min_density == previous);
    for (int f = 1; f <= 3; ++f) {
      const int density = worst_case_density(g, 1, f).min_density;
      CHECK(density <= previous);
      previous = density;
    }
  }
}

TEST_CASE("tolerance agrees with the worst-case report") {
  std::mt19937 rng(101);
  for (int i = 0; i < 15; ++i) {
    Graph g = er_graph(6 + i % 2, 0.5, rng);
    for (int delta : {1, 2})
      for (int f = 0; f <= 2; ++f) {
        FaultReport report = worst_case_density(g, delta, f);
        for (int p = 1; p <= g.vertex_count(); ++p)
          CHECK(is_fault_tolerant(g, delta, p, f).tolerant == (report.min_density >= p));
      }
  }
}

TEST_CASE("removing the witness reproduces the reported density") {
  std::mt19937 rng(103);
  for (int i = 0; i < 20; ++i) {
    Graph g = er_graph(7, 0.45, rng);
    for (int f = 0; f <= 2; ++f) {
      FaultReport report = worst_case_density(g, 1, f);
      CHECK(static_cast<int>(report.witness.size()) == f);
      Graph survivors = remove_vertices(g, report.witness);
      // density of the survivors, counting only surviving ids
      VertexSet alive;
      for (Vertex v = 0; v < survivors.vertex_count(); ++v)
        if (!std::binary_search(report.witness.begin(), report.witness.end(), v))
          alive.push_back(v);
      int best = 0;
      for (unsigned mask = 1; mask < (1u << alive.size()); ++mask) {
        VertexSet members;
        for (std::size_t b = 0; b < alive.size(); ++b)
          if (mask & (1u << b)) members.push_back(alive[b]);
        bool clique = true;
        for (std::size_t a = 0; a < members.size() && clique; ++a)
          for (std::size_t c = a + 1; c < members.size() && clique; ++c)
            if (!survivors.has_edge(members[a], members[c])) clique = false;
        if (clique) best = std::max(best, static_cast<int>(members.size()));
      }
      CHECK(best == report.min_density);
    }
  }
}
