#pragma once

#include "netproj/graph.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace netproj {

/// How a projection was materialized.
///
/// FullChains enumerates every simple chain from the angle vertex, which is
/// what the multilevel description calls for; the size can grow factorially
/// with depth, hence the node cap. ShortestOnly keeps a single node per
/// vertex, placed at its first-occurrence level under its smallest
/// same-level-minus-one neighbor; both modes agree on first-occurrence
/// levels, so metrics use the cheap one. Parsed marks projections
/// reconstructed from bracket text.
enum class ProjectionMode { FullChains, ShortestOnly, Parsed };

struct ProjectionNode {
  Vertex vertex;
  int parent;                 // node index, -1 for the angle vertex
  int level;
  std::vector<int> children;  // node indices, ascending by child vertex
};

/// Multilevel description of a graph from an angle vertex: level 0 holds the
/// root, and the subset generated by a node is the neighborhood of its vertex
/// minus the chain leading to it. Immutable after construction.
class Projection {
public:
  Projection(int depth, ProjectionMode mode, std::vector<ProjectionNode> nodes);

  Vertex root() const { return nodes_.front().vertex; }
  int depth() const { return depth_; }
  ProjectionMode mode() const { return mode_; }

  const std::vector<ProjectionNode>& nodes() const { return nodes_; }
  std::size_t node_count() const { return nodes_.size(); }

  /// Number of populated levels (highest level + 1); at most depth() + 1.
  int levels() const { return static_cast<int>(level_counts_.size()); }

  /// C_i: number of vertex occurrences at a level.
  std::size_t level_count(int level) const;

  /// V_i: distinct vertices represented at a level, ascending.
  const VertexSet& level_vertices(int level) const;

  /// First level at which v occurs, or -1 when v is absent. In projections
  /// built from a graph this equals dist(root, v) for levels within depth.
  int first_level(Vertex v) const;

  /// W(v): the simple chain from the root to the given node, inclusive.
  std::vector<Vertex> chain_to(int node_index) const;

private:
  int depth_;
  ProjectionMode mode_;
  std::vector<ProjectionNode> nodes_;
  std::vector<std::size_t> level_counts_;
  std::vector<VertexSet> level_vertices_;
  std::vector<int> first_levels_;  // indexed by vertex id
};

inline constexpr std::size_t kDefaultProjectionNodeCap = 10'000'000;

/// Builds the depth-k projection of g from the given angle vertex. Depth is
/// clamped to n-1 (no simple chain is longer). FullChains mode throws
/// resource_error when the node count would exceed node_cap.
Projection build_projection(const Graph& g, Vertex root, int depth, ProjectionMode mode,
                            std::size_t node_cap = kDefaultProjectionNodeCap);

/// Canonical bracket text: vertex[(child,...)] with ascending siblings and no
/// whitespace, e.g. "0(1(4),3(4),4(1,3))".
std::string to_bracket(const Projection& p);

/// Inverse of to_bracket. Whitespace between tokens is ignored; siblings are
/// reordered ascending. Unbalanced parentheses, empty subsets, non-integer
/// tokens and chain-repeating vertices are rejected.
Projection parse_bracket(std::string_view text);

/// Smallest level k_e whose union of level vertex sets covers the whole
/// graph, or nullopt when the projection depth is insufficient. When defined
/// it equals the eccentricity of the angle vertex.
std::optional<int> vertex_complete_level(const Projection& p, const Graph& g);

/// True when every edge of g occurs as a parent-to-child incidence in p.
/// Implies vertex completeness; the converse fails (K3 at depth 1).
bool is_edge_complete(const Projection& p, const Graph& g);

/// Per-level occurrence counts of v (size levels()); entry i is the number
/// of simple chains of length i from the root to v, within depth. Requires a
/// chain-enumerating projection: ShortestOnly mode is rejected.
std::vector<std::size_t> multiplicity(const Projection& p, Vertex v);

/// Shortest-path metrics, computed as first-occurrence levels of
/// shortest-only projections. The graph must be connected; otherwise a
/// validation_error names an unreachable vertex.
int distance(const Graph& g, Vertex u, Vertex v);
int eccentricity(const Graph& g, Vertex v);
int diameter(const Graph& g);

} // namespace netproj
