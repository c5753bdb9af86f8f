#pragma once

#include "netproj/graph.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace netproj {

/// Projection of an angle vertex cut to two levels and a candidate set: the
/// first level is N(v) within the candidates, and each first-level vertex u
/// generates gen(u) = N(u) restricted to the first level. Membership is
/// symmetric: x in gen(u) iff u in gen(x).
struct RestrictedProjection {
  Vertex angle = 0;
  VertexSet first_level;             // ascending
  std::vector<VertexSet> generated;  // parallel to first_level, each ascending
};

/// Builds the restricted projection of v against a candidate set containing
/// v. Candidates must be sorted, duplicate-free and in range.
RestrictedProjection restricted_projection(const Graph& g, Vertex v, const VertexSet& candidates);

/// Bracket text of a restricted projection, e.g. "0(1(4),3(4),4(1,3))".
std::string to_bracket(const RestrictedProjection& rp);

/// Largest clique order s admitted through the angle vertex by counting:
/// a clique of order s through v needs at least s-1 first-level vertices u
/// with |gen(u)| >= s-2. Upper-bounds every clique through v within the
/// candidate set; 1 <= result <= |first_level| + 1.
int clique_bound(const RestrictedProjection& rp);

struct CliqueResult {
  VertexSet vertices;  // pairwise adjacent, canonical (lexicographically
                       // smallest among maximum cliques)
  int size = 0;
  int delta = 1;  // reachability the clique was computed under
};

/// One batch round of bound-driven candidate elimination.
struct EliminationPass {
  /// (vertex, clique_bound) for every candidate alive when the pass started.
  std::vector<std::pair<Vertex, int>> bounds;
  /// Candidates whose bound did not exceed the incumbent clique size.
  VertexSet eliminated;
};

struct CliqueSearchTrace {
  VertexSet seed;  // greedy incumbent the elimination started from
  std::vector<EliminationPass> passes;
};

/// Exact maximum clique via projection-guided search: greedy seed, iterated
/// bound-driven elimination to a fixpoint, then ascending branch-and-bound
/// over neighborhood candidate sets with the subset-coincidence early
/// accept. Deterministic; ties break to the lexicographically smallest
/// vertex set. Empty graphs are rejected.
CliqueResult max_clique(const Graph& g);
CliqueResult max_clique(const Graph& g, CliqueSearchTrace& trace);

/// delta-density: order of the maximum clique of the delta-reachability
/// graph, the potential parallelism for fully connected information tasks.
CliqueResult delta_density(const Graph& g, int delta);

inline constexpr std::size_t kDefaultComponentCap = 1'000'000;

/// All maximal cliques of the delta-reachability graph with at least
/// min_size vertices, canonical and sorted lexicographically.
std::vector<VertexSet> enumerate_delta_components(const Graph& g, int delta, int min_size,
                                                  std::size_t cap = kDefaultComponentCap);

} // namespace netproj
