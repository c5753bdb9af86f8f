#pragma once

#include "netproj/graph.hpp"

#include <optional>
#include <vector>

// Brute-force reference implementations, deliberately independent of the
// projection machinery: Floyd-Warshall distances, subset-scan cliques,
// exhaustive injective embeddings. They back the test suites and the CLI
// audit subcommand on instances small enough to enumerate.
namespace netproj::oracle {

inline constexpr int kUnreachable = -1;

inline constexpr int kMaxCliqueVertices = 20;
inline constexpr int kMaxEmbedTaskVertices = 6;
inline constexpr int kMaxEmbedSystemVertices = 8;

/// All-pairs shortest path lengths; kUnreachable marks disconnected pairs.
std::vector<std::vector<int>> all_pairs_distances(const Graph& g);

/// Canonical maximum clique by scanning every vertex subset; n <= 20.
VertexSet max_clique(const Graph& g);

/// First injective mapping (in lexicographic order of the mapping vector)
/// placing every task edge within distance delta; |V(task)| <= 6,
/// |V(system)| <= 8.
std::optional<std::vector<Vertex>> embed(const Graph& task, const Graph& system, int delta);

} // namespace netproj::oracle
