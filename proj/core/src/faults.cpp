#include "netproj/faults.hpp"

#include "netproj/clique.hpp"
#include "netproj/errors.hpp"

#include <algorithm>

namespace netproj {

namespace {

// C(n, k) saturated at limit + 1.
std::size_t binomial_capped(int n, int k, std::size_t limit) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 result = 1;
  for (int i = 1; i <= k; ++i) {
    // result * (n - k + i) / i stays integral at every step
    result = result * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (result > limit) return limit + 1;
  }
  return static_cast<std::size_t>(result);
}

// Delta-density of the survivors, computed on a compacted copy so isolated
// ghost ids never enter the search.
int survivor_density(const Graph& g, const std::vector<char>& dead, int delta) {
  std::vector<Vertex> compact_id(static_cast<std::size_t>(g.vertex_count()), -1);
  int alive = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!dead[static_cast<std::size_t>(v)]) compact_id[static_cast<std::size_t>(v)] = alive++;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (auto [u, v] : g.edges())
    if (!dead[static_cast<std::size_t>(u)] && !dead[static_cast<std::size_t>(v)])
      edges.emplace_back(compact_id[static_cast<std::size_t>(u)],
                         compact_id[static_cast<std::size_t>(v)]);
  return delta_density(Graph(alive, edges), delta).size;
}

bool next_combination(VertexSet& combo, int n) {
  const int k = static_cast<int>(combo.size());
  for (int i = k - 1; i >= 0; --i) {
    if (combo[static_cast<std::size_t>(i)] < n - k + i) {
      ++combo[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j)
        combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
      return true;
    }
  }
  return false;
}

void check_fault_arguments(const Graph& g, int delta, int multiplicity, std::size_t cap) {
  if (g.vertex_count() == 0) throw validation_error("empty graph");
  if (delta < 1) throw validation_error("reachability delta must be at least 1");
  if (multiplicity < 0 || multiplicity >= g.vertex_count())
    throw validation_error("fault multiplicity must satisfy 0 <= f < n");
  if (binomial_capped(g.vertex_count(), multiplicity, cap) > cap)
    throw resource_error("number of fault sets C(" + std::to_string(g.vertex_count()) + ", " +
                         std::to_string(multiplicity) + ") exceeds the cap of " +
                         std::to_string(cap) +
                         "; reduce the multiplicity or use the early-exit tolerance check");
}

template <typename Visit>
void for_each_fault_set(const Graph& g, int multiplicity, Visit&& visit) {
  const int n = g.vertex_count();
  VertexSet combo(static_cast<std::size_t>(multiplicity));
  for (int i = 0; i < multiplicity; ++i) combo[static_cast<std::size_t>(i)] = i;
  std::vector<char> dead(static_cast<std::size_t>(n), 0);
  while (true) {
    std::fill(dead.begin(), dead.end(), 0);
    for (Vertex v : combo) dead[static_cast<std::size_t>(v)] = 1;
    if (!visit(combo, dead)) return;
    if (multiplicity == 0 || !next_combination(combo, n)) return;
  }
}

} // namespace

FaultReport worst_case_density(const Graph& g, int delta, int multiplicity, std::size_t cap) {
  check_fault_arguments(g, delta, multiplicity, cap);
  FaultReport report;
  report.delta = delta;
  report.multiplicity = multiplicity;
  report.min_density = -1;
  for_each_fault_set(g, multiplicity, [&](const VertexSet& combo, const std::vector<char>& dead) {
    const int density = survivor_density(g, dead, delta);
    ++report.examined;
    if (report.min_density < 0 || density < report.min_density) {
      report.min_density = density;
      report.witness = combo;
    }
    return true;
  });
  return report;
}

ToleranceVerdict is_fault_tolerant(const Graph& g, int delta, int p, int multiplicity,
                                   std::size_t cap) {
  if (p < 1) throw validation_error("parallelism requirement p must be at least 1");
  check_fault_arguments(g, delta, multiplicity, cap);
  ToleranceVerdict verdict;
  verdict.tolerant = true;
  for_each_fault_set(g, multiplicity, [&](const VertexSet& combo, const std::vector<char>& dead) {
    ++verdict.examined;
    if (survivor_density(g, dead, delta) < p) {
      verdict.tolerant = false;
      verdict.counterexample = combo;
      return false;
    }
    return true;
  });
  return verdict;
}

} // namespace netproj
