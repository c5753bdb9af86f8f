#pragma once

#include "netproj/graph.hpp"

namespace netproj {

/// A graph of limited reachability: vertices become adjacent exactly when
/// their distance in the base graph lies in [1, delta]. Keeps the base and
/// delta so downstream reports can cite their provenance.
struct ReachGraph {
  Graph base;
  int delta = 1;
  Graph derived;
};

/// Compresses g into its delta-reachability graph by truncating every
/// vertex's shortest-only projection at level delta and joining the angle
/// vertex to all vertices of levels 1..delta. Pairs in different components
/// never become adjacent. delta < 1 is a validation error.
ReachGraph compress(const Graph& g, int delta);

} // namespace netproj
