#pragma once

#include "netproj/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

namespace netproj::testing {

// Fig-style 6-vertex fixture used across the suites; its maximum clique is
// {1, 2, 4, 5}.
inline Graph g6() {
  return from_edge_list("0 1\n0 3\n0 4\n1 2\n1 4\n1 5\n2 3\n2 4\n2 5\n3 4\n4 5\n");
}

inline Graph ring(int n) { return generate_topology(TopologyKind::Ring, {n}); }
inline Graph complete(int n) { return generate_topology(TopologyKind::Complete, {n}); }
inline Graph hypercube(int d) { return generate_topology(TopologyKind::Hypercube, {d}); }

inline Graph path(int n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

inline Graph er_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

inline bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v))
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == g.vertex_count();
}

// Every labeled graph on n vertices, one per edge subset.
inline void for_each_graph(int n, const std::function<void(const Graph&)>& fn,
                           bool connected_only = false) {
  std::vector<std::pair<Vertex, Vertex>> all_edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all_edges.emplace_back(u, v);
  const std::size_t total = std::size_t{1} << all_edges.size();
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t mask = 0; mask < total; ++mask) {
    edges.clear();
    for (std::size_t bit = 0; bit < all_edges.size(); ++bit)
      if (mask & (std::size_t{1} << bit)) edges.push_back(all_edges[bit]);
    Graph g(n, edges);
    if (connected_only && !is_connected(g)) continue;
    fn(g);
  }
}

// Counts simple cycles of exactly the given length by scanning every
// injective vertex sequence; each cycle is hit 2 * length times.
inline std::size_t count_cycles_brute(const Graph& g, int length) {
  const int n = g.vertex_count();
  if (length < 3 || length > n) return 0;
  std::vector<Vertex> seq(static_cast<std::size_t>(length));
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::size_t hits = 0;
  std::function<void(int)> rec = [&](int pos) {
    if (pos == length) {
      if (g.has_edge(seq[static_cast<std::size_t>(length - 1)], seq[0])) ++hits;
      return;
    }
    for (Vertex v = 0; v < n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      if (pos > 0 && !g.has_edge(seq[static_cast<std::size_t>(pos - 1)], v)) continue;
      used[static_cast<std::size_t>(v)] = 1;
      seq[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1);
      used[static_cast<std::size_t>(v)] = 0;
    }
  };
  rec(0);
  return hits / (2 * static_cast<std::size_t>(length));
}

} // namespace netproj::testing
