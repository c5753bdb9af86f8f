#pragma once

#include "netproj/graph.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace netproj {

/// Injective placement of a task information graph onto system vertices such
/// that every information-adjacent pair sits within distance delta.
struct Embedding {
  std::vector<Vertex> mapping;  // mapping[task vertex] = system vertex
  int delta = 1;
};

/// Backtracking monomorphism search of task into the delta-reachability
/// graph of system: task vertices in descending degree (ties by id),
/// candidates ascending, first hit returned. Exhaustive: nullopt means no
/// embedding exists. More task vertices than system vertices is an immediate
/// nullopt.
std::optional<Embedding> embed(const Graph& task, const Graph& system, int delta);

inline constexpr std::size_t kDefaultCycleCap = 1'000'000;

/// All simple cycles of exactly the given length, each once, in canonical
/// form (smallest vertex first, then the smaller of its two cycle neighbors),
/// sorted lexicographically. Scans, per ascending root, the chains of the
/// root's projection restricted to larger vertices and closes those ending in
/// the root's neighborhood.
std::vector<std::vector<Vertex>> enumerate_cycles(const Graph& g, int length,
                                                  std::size_t cap = kDefaultCycleCap);

/// Length of the shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

/// First canonical cycle of the given length in the delta-reachability graph,
/// wrapped as an embedding of the ring task C_length.
std::optional<Embedding> embed_ring(const Graph& g, int length, int delta);

} // namespace netproj
