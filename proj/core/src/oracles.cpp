#include "netproj/oracles.hpp"

#include "netproj/errors.hpp"

#include <algorithm>

namespace netproj::oracle {

std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
  const int n = g.vertex_count();
  const int inf = n + 1;
  std::vector<std::vector<int>> dist(static_cast<std::size_t>(n),
                                     std::vector<int>(static_cast<std::size_t>(n), inf));
  for (Vertex v = 0; v < n; ++v) dist[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)] = 0;
  for (auto [u, v] : g.edges()) {
    dist[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
    dist[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            std::min(dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                     dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] +
                         dist[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]);
  for (auto& row : dist)
    for (int& d : row)
      if (d >= inf) d = kUnreachable;
  return dist;
}

VertexSet max_clique(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) throw validation_error("maximum clique of an empty graph");
  if (n > kMaxCliqueVertices)
    throw resource_error("oracle clique search is limited to " +
                         std::to_string(kMaxCliqueVertices) + " vertices");
  std::vector<unsigned> adj_bits(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : g.edges()) {
    adj_bits[static_cast<std::size_t>(u)] |= 1u << v;
    adj_bits[static_cast<std::size_t>(v)] |= 1u << u;
  }
  VertexSet best;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    bool clique = true;
    for (int v = 0; v < n && clique; ++v)
      if (mask & (1u << v))
        if ((mask & adj_bits[static_cast<std::size_t>(v)]) != (mask ^ (1u << v))) clique = false;
    if (!clique) continue;
    VertexSet members;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) members.push_back(v);
    if (members.size() > best.size() || (members.size() == best.size() && members < best))
      best = std::move(members);
  }
  return best;
}

namespace {

bool extend(const Graph& task, const std::vector<std::vector<int>>& dist, int delta,
            std::vector<Vertex>& mapping, std::vector<char>& used, Vertex task_v) {
  if (task_v == task.vertex_count()) return true;
  const int n = static_cast<int>(used.size());
  for (Vertex cs = 0; cs < n; ++cs) {
    if (used[static_cast<std::size_t>(cs)]) continue;
    bool ok = true;
    for (Vertex nb : task.neighbors(task_v)) {
      if (nb >= task_v) continue;  // not mapped yet
      const int d = dist[static_cast<std::size_t>(cs)]
                        [static_cast<std::size_t>(mapping[static_cast<std::size_t>(nb)])];
      if (d < 1 || d > delta) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    mapping[static_cast<std::size_t>(task_v)] = cs;
    used[static_cast<std::size_t>(cs)] = 1;
    if (extend(task, dist, delta, mapping, used, task_v + 1)) return true;
    used[static_cast<std::size_t>(cs)] = 0;
  }
  return false;
}

} // namespace

std::optional<std::vector<Vertex>> embed(const Graph& task, const Graph& system, int delta) {
  if (delta < 1) throw validation_error("reachability delta must be at least 1");
  if (task.vertex_count() > kMaxEmbedTaskVertices)
    throw resource_error("oracle embedding is limited to " +
                         std::to_string(kMaxEmbedTaskVertices) + " task vertices");
  if (system.vertex_count() > kMaxEmbedSystemVertices)
    throw resource_error("oracle embedding is limited to " +
                         std::to_string(kMaxEmbedSystemVertices) + " system vertices");
  if (task.vertex_count() > system.vertex_count()) return std::nullopt;
  const auto dist = all_pairs_distances(system);
  std::vector<Vertex> mapping(static_cast<std::size_t>(task.vertex_count()), -1);
  std::vector<char> used(static_cast<std::size_t>(system.vertex_count()), 0);
  if (extend(task, dist, delta, mapping, used, 0)) return mapping;
  return std::nullopt;
}

} // namespace netproj::oracle
