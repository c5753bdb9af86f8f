#include "netproj/embedding.hpp"

#include "netproj/errors.hpp"
#include "netproj/reachability.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace netproj {

std::optional<Embedding> embed(const Graph& task, const Graph& system, int delta) {
  if (delta < 1) throw validation_error("reachability delta must be at least 1");
  if (task.vertex_count() > system.vertex_count()) return std::nullopt;
  const Graph target = compress(system, delta).derived;

  std::vector<Vertex> order(static_cast<std::size_t>(task.vertex_count()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return task.degree(a) > task.degree(b); });

  std::vector<Vertex> assigned(static_cast<std::size_t>(task.vertex_count()), -1);
  std::vector<char> used(static_cast<std::size_t>(system.vertex_count()), 0);

  auto consistent = [&](Vertex task_v, Vertex cs_v) {
    for (Vertex nb : task.neighbors(task_v)) {
      const Vertex image = assigned[static_cast<std::size_t>(nb)];
      if (image >= 0 && !target.has_edge(cs_v, image)) return false;
    }
    return true;
  };

  // Depth-first over the fixed vertex order, candidates ascending.
  std::vector<Vertex> cursor(order.size(), 0);
  std::size_t depth = 0;
  while (true) {
    if (depth == order.size()) return Embedding{assigned, delta};
    const Vertex task_v = order[depth];
    Vertex& candidate = cursor[depth];
    bool advanced = false;
    while (candidate < system.vertex_count()) {
      const Vertex cs_v = candidate++;
      if (used[static_cast<std::size_t>(cs_v)] || !consistent(task_v, cs_v)) continue;
      assigned[static_cast<std::size_t>(task_v)] = cs_v;
      used[static_cast<std::size_t>(cs_v)] = 1;
      ++depth;
      if (depth < order.size()) cursor[depth] = 0;
      advanced = true;
      break;
    }
    if (advanced) continue;
    if (depth == 0) return std::nullopt;
    --depth;
    const Vertex undo = order[depth];
    used[static_cast<std::size_t>(assigned[static_cast<std::size_t>(undo)])] = 0;
    assigned[static_cast<std::size_t>(undo)] = -1;
  }
}

namespace {

// Walks, for each root in ascending order, every simple chain of
// length - 1 edges through vertices larger than the root; a chain ending in
// the root's neighborhood closes a cycle. Each cycle shows up in both
// directions; the canonical one has chain front < chain back. Returns false
// when the visitor stops the walk.
template <typename Visitor>
bool for_each_cycle(const Graph& g, int length, Visitor&& visit) {
  const int chain_edges = length - 1;
  std::vector<Vertex> chain;
  std::vector<char> on_chain(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex root = 0; root < g.vertex_count(); ++root) {
    struct Frame {
      Vertex vertex;
      std::size_t cursor;
    };
    std::vector<Frame> stack{{root, 0}};
    on_chain[static_cast<std::size_t>(root)] = 1;
    chain.clear();
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (static_cast<int>(chain.size()) == chain_edges) {
        // Full-length chain; close it against the root if possible.
        if (g.has_edge(f.vertex, root) && chain.front() < chain.back()) {
          std::vector<Vertex> cycle;
          cycle.reserve(static_cast<std::size_t>(length));
          cycle.push_back(root);
          cycle.insert(cycle.end(), chain.begin(), chain.end());
          if (!visit(cycle)) return false;
        }
        on_chain[static_cast<std::size_t>(f.vertex)] = 0;
        chain.pop_back();
        stack.pop_back();
        continue;
      }
      const auto& nbrs = g.neighbors(f.vertex);
      bool descended = false;
      while (f.cursor < nbrs.size()) {
        const Vertex w = nbrs[f.cursor++];
        if (w <= root || on_chain[static_cast<std::size_t>(w)]) continue;
        on_chain[static_cast<std::size_t>(w)] = 1;
        chain.push_back(w);
        stack.push_back({w, 0});
        descended = true;
        break;
      }
      if (!descended) {
        on_chain[static_cast<std::size_t>(f.vertex)] = 0;
        if (!chain.empty() && chain.back() == f.vertex) chain.pop_back();
        stack.pop_back();
      }
    }
    on_chain.assign(on_chain.size(), 0);
  }
  return true;
}

} // namespace

std::vector<std::vector<Vertex>> enumerate_cycles(const Graph& g, int length, std::size_t cap) {
  if (length < 3) throw validation_error("cycle length must be at least 3");
  std::vector<std::vector<Vertex>> cycles;
  for_each_cycle(g, length, [&](const std::vector<Vertex>& cycle) {
    if (cycles.size() >= cap)
      throw resource_error("cycle cap of " + std::to_string(cap) + " cycles exceeded");
    cycles.push_back(cycle);
    return true;
  });
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

std::optional<int> girth(const Graph& g) {
  int best = -1;
  const int n = g.vertex_count();
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<Vertex> parent(static_cast<std::size_t>(n));
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    dist[static_cast<std::size_t>(root)] = 0;
    std::queue<Vertex> frontier;
    frontier.push(root);
    while (!frontier.empty()) {
      const Vertex v = frontier.front();
      frontier.pop();
      for (Vertex w : g.neighbors(v))
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
          parent[static_cast<std::size_t>(w)] = v;
          frontier.push(w);
        }
    }
    for (auto [u, w] : g.edges()) {
      if (dist[static_cast<std::size_t>(u)] < 0 || dist[static_cast<std::size_t>(w)] < 0)
        continue;
      if (parent[static_cast<std::size_t>(u)] == w || parent[static_cast<std::size_t>(w)] == u)
        continue;  // tree edge, no cycle
      const int cycle_bound = dist[static_cast<std::size_t>(u)] +
                              dist[static_cast<std::size_t>(w)] + 1;
      if (best < 0 || cycle_bound < best) best = cycle_bound;
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

std::optional<Embedding> embed_ring(const Graph& g, int length, int delta) {
  if (length < 3) throw validation_error("cycle length must be at least 3");
  const Graph target = compress(g, delta).derived;
  std::optional<Embedding> result;
  for_each_cycle(target, length, [&](const std::vector<Vertex>& cycle) {
    result = Embedding{cycle, delta};
    return false;  // the walk visits canonical cycles in lexicographic order
  });
  return result;
}

} // namespace netproj
