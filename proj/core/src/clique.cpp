#include "netproj/clique.hpp"

#include "netproj/errors.hpp"
#include "netproj/reachability.hpp"

#include <algorithm>

namespace netproj {

RestrictedProjection restricted_projection(const Graph& g, Vertex v, const VertexSet& candidates) {
  if (!is_sorted_unique(candidates))
    throw validation_error("candidate set must be sorted and duplicate-free");
  for (Vertex c : candidates)
    if (!g.has_vertex(c))
      throw validation_error("candidate vertex " + std::to_string(c) + " out of range");
  if (!std::binary_search(candidates.begin(), candidates.end(), v))
    throw validation_error("angle vertex " + std::to_string(v) +
                           " is not in the candidate set");
  RestrictedProjection rp;
  rp.angle = v;
  std::set_intersection(g.neighbors(v).begin(), g.neighbors(v).end(), candidates.begin(),
                        candidates.end(), std::back_inserter(rp.first_level));
  rp.generated.reserve(rp.first_level.size());
  for (Vertex u : rp.first_level) {
    VertexSet gen;
    std::set_intersection(g.neighbors(u).begin(), g.neighbors(u).end(), rp.first_level.begin(),
                          rp.first_level.end(), std::back_inserter(gen));
    rp.generated.push_back(std::move(gen));
  }
  return rp;
}

std::string to_bracket(const RestrictedProjection& rp) {
  std::string out = std::to_string(rp.angle);
  if (rp.first_level.empty()) return out;
  out += '(';
  for (std::size_t i = 0; i < rp.first_level.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(rp.first_level[i]);
    const VertexSet& gen = rp.generated[i];
    if (!gen.empty()) {
      out += '(';
      for (std::size_t j = 0; j < gen.size(); ++j) {
        if (j) out += ',';
        out += std::to_string(gen[j]);
      }
      out += ')';
    }
  }
  out += ')';
  return out;
}

int clique_bound(const RestrictedProjection& rp) {
  const int n1 = static_cast<int>(rp.first_level.size());
  for (int s = n1 + 1; s >= 2; --s) {
    int count = 0;
    for (const VertexSet& gen : rp.generated)
      if (static_cast<int>(gen.size()) >= s - 2) ++count;
    if (count >= s - 1) return s;
  }
  return 1;
}

namespace {

// Lexicographically smallest maximal clique: scan ascending, keep every
// vertex adjacent to all chosen so far.
VertexSet greedy_seed(const Graph& g) {
  VertexSet clique;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    bool compatible = true;
    for (Vertex u : clique)
      if (!g.has_edge(u, v)) {
        compatible = false;
        break;
      }
    if (compatible) clique.push_back(v);
  }
  return clique;
}

struct CliqueSearch {
  const Graph& g;
  VertexSet best;

  bool all_pairwise_adjacent(const VertexSet& vs) const {
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        if (!g.has_edge(vs[i], vs[j])) return false;
    return true;
  }

  void expand(VertexSet& current, const VertexSet& candidates) {
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (current.size() + (candidates.size() - i) <= best.size()) return;
      const Vertex v = candidates[i];
      VertexSet next;
      for (std::size_t j = i + 1; j < candidates.size(); ++j)
        if (g.has_edge(v, candidates[j])) next.push_back(candidates[j]);
      current.push_back(v);
      if (current.size() > best.size()) best = current;
      if (!next.empty()) {
        // Coincidence early accept: when every first-level vertex together
        // with its generated subset reproduces the whole candidate set, that
        // set plus the chain below it already is the largest clique here.
        if (all_pairwise_adjacent(next)) {
          if (current.size() + next.size() > best.size()) {
            best = current;
            best.insert(best.end(), next.begin(), next.end());
          }
        } else {
          expand(current, next);
        }
      }
      current.pop_back();
    }
  }
};

CliqueResult max_clique_impl(const Graph& g, CliqueSearchTrace* trace) {
  if (g.vertex_count() == 0) throw validation_error("maximum clique of an empty graph");
  VertexSet best = greedy_seed(g);
  if (trace) trace->seed = best;

  VertexSet candidates(static_cast<std::size_t>(g.vertex_count()));
  for (Vertex v = 0; v < g.vertex_count(); ++v) candidates[static_cast<std::size_t>(v)] = v;

  // Batch elimination to a fixpoint: every candidate whose bound cannot beat
  // the incumbent drops out; bounds are recomputed on the shrunken set.
  while (!candidates.empty()) {
    EliminationPass pass;
    for (Vertex v : candidates) {
      const int bound = clique_bound(restricted_projection(g, v, candidates));
      pass.bounds.emplace_back(v, bound);
      if (bound <= static_cast<int>(best.size())) pass.eliminated.push_back(v);
    }
    if (pass.eliminated.empty()) break;
    VertexSet remaining;
    std::set_difference(candidates.begin(), candidates.end(), pass.eliminated.begin(),
                        pass.eliminated.end(), std::back_inserter(remaining));
    candidates = std::move(remaining);
    if (trace) trace->passes.push_back(std::move(pass));
  }

  CliqueSearch search{g, std::move(best)};
  VertexSet current;
  search.expand(current, candidates);
  const int size = static_cast<int>(search.best.size());
  return CliqueResult{std::move(search.best), size, 1};
}

} // namespace

CliqueResult max_clique(const Graph& g) { return max_clique_impl(g, nullptr); }

CliqueResult max_clique(const Graph& g, CliqueSearchTrace& trace) {
  trace = CliqueSearchTrace{};
  return max_clique_impl(g, &trace);
}

CliqueResult delta_density(const Graph& g, int delta) {
  ReachGraph rg = compress(g, delta);
  CliqueResult result = max_clique(rg.derived);
  result.delta = delta;
  return result;
}

namespace {

struct ComponentEnumerator {
  const Graph& g;
  int min_size;
  std::size_t cap;
  std::vector<VertexSet>& out;

  void emit(const VertexSet& clique) {
    if (static_cast<int>(clique.size()) < min_size) return;
    if (out.size() >= cap)
      throw resource_error("component cap of " + std::to_string(cap) +
                           " maximal cliques exceeded");
    out.push_back(clique);
  }

  static VertexSet intersect_neighbors(const Graph& g, const VertexSet& set, Vertex v) {
    VertexSet r;
    std::set_intersection(set.begin(), set.end(), g.neighbors(v).begin(), g.neighbors(v).end(),
                          std::back_inserter(r));
    return r;
  }

  // Bron-Kerbosch with a max-degree-into-P pivot.
  void run(VertexSet& r, VertexSet p, VertexSet x) {
    if (p.empty() && x.empty()) {
      emit(r);
      return;
    }
    Vertex pivot = -1;
    std::size_t pivot_score = 0;
    for (const VertexSet* side : {&p, &x})
      for (Vertex u : *side) {
        std::size_t score = intersect_neighbors(g, p, u).size();
        if (pivot < 0 || score > pivot_score) {
          pivot = u;
          pivot_score = score;
        }
      }
    VertexSet branch;
    std::set_difference(p.begin(), p.end(), g.neighbors(pivot).begin(), g.neighbors(pivot).end(),
                        std::back_inserter(branch));
    for (Vertex v : branch) {
      r.push_back(v);
      run(r, intersect_neighbors(g, p, v), intersect_neighbors(g, x, v));
      r.pop_back();
      p.erase(std::find(p.begin(), p.end(), v));
      x.insert(std::lower_bound(x.begin(), x.end(), v), v);
    }
  }
};

} // namespace

std::vector<VertexSet> enumerate_delta_components(const Graph& g, int delta, int min_size,
                                                  std::size_t cap) {
  if (min_size < 1) throw validation_error("minimum component size must be at least 1");
  ReachGraph rg = compress(g, delta);
  std::vector<VertexSet> out;
  ComponentEnumerator enumerator{rg.derived, min_size, cap, out};
  VertexSet r, p(static_cast<std::size_t>(g.vertex_count()));
  for (Vertex v = 0; v < g.vertex_count(); ++v) p[static_cast<std::size_t>(v)] = v;
  enumerator.run(r, std::move(p), {});
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace netproj
