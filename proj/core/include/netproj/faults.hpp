#pragma once

#include "netproj/graph.hpp"

#include <cstddef>
#include <optional>

namespace netproj {

/// Worst-case delta-density over every fault set of a given multiplicity.
/// Reachability is measured in the surviving graph: faults sever routes.
struct FaultReport {
  int delta = 1;
  int multiplicity = 0;  // f, simultaneous processor failures
  int min_density = 0;   // worst-case delta-density of the survivors
  VertexSet witness;     // lexicographically smallest fault set attaining it
  std::size_t examined = 0;
};

inline constexpr std::size_t kDefaultFaultSetCap = 1'000'000;

/// Exhaustively evaluates the delta-density of g minus F over every fault
/// set F of the given multiplicity, in lexicographic order. C(n, f) beyond
/// the cap raises resource_error (suggesting a smaller f or the
/// fault-tolerance early-exit check).
FaultReport worst_case_density(const Graph& g, int delta, int multiplicity,
                               std::size_t cap = kDefaultFaultSetCap);

struct ToleranceVerdict {
  bool tolerant = false;
  std::optional<VertexSet> counterexample;  // first fault set breaking p
  std::size_t examined = 0;
};

/// True when every fault set of the given multiplicity leaves delta-density
/// at least p; short-circuits on the lexicographically first counterexample.
ToleranceVerdict is_fault_tolerant(const Graph& g, int delta, int p, int multiplicity,
                                   std::size_t cap = kDefaultFaultSetCap);

} // namespace netproj
