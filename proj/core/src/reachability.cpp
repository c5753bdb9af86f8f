#include "netproj/reachability.hpp"

#include "netproj/errors.hpp"
#include "netproj/projection.hpp"

namespace netproj {

ReachGraph compress(const Graph& g, int delta) {
  if (delta < 1) throw validation_error("reachability delta must be at least 1");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex root = 0; root < g.vertex_count(); ++root) {
    Projection p = build_projection(g, root, delta, ProjectionMode::ShortestOnly);
    for (int level = 1; level < p.levels(); ++level)
      for (Vertex v : p.level_vertices(level))
        if (root < v) edges.emplace_back(root, v);
  }
  return ReachGraph{g, delta, Graph(g.vertex_count(), edges)};
}

} // namespace netproj
