#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace netproj {

using Vertex = int;

/// Ascending, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

/// Simple undirected unweighted graph over dense integer ids 0..n-1.
/// Immutable after construction; neighbor lists are kept sorted ascending.
class Graph {
public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  /// Graph on n vertices with the given undirected edges. Duplicate edges
  /// collapse silently; a self-loop or an id outside 0..n-1 throws
  /// validation_error.
  Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return m_; }

  const std::vector<Vertex>& neighbors(Vertex v) const;
  int degree(Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const;
  bool has_vertex(Vertex v) const { return v >= 0 && v < n_; }

  /// All edges as (u, v) pairs with u < v, sorted ascending.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  int min_degree() const;
  int max_degree() const;

  bool operator==(const Graph&) const = default;

private:
  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::vector<Vertex>> adj_;
};

enum class TopologyKind { Ring, Complete, Hypercube, Torus, Mesh };

/// Parses an edge-list document: `#` starts a comment, an optional first
/// line `n=<count>` declares trailing isolated vertices, every other
/// non-blank line is a pair `u v`. Malformed lines raise parse_error with
/// the line number; self-loops raise validation_error.
Graph from_edge_list(std::string_view text);

/// Canonical edge-list text: one `u v` line per edge with u < v, pairs
/// sorted ascending; an `n=<count>` header is emitted only when the edges
/// alone would not determine the vertex count. Round-trips through
/// from_edge_list.
std::string to_edge_list(const Graph& g);

/// Standard interconnect generators.
///   ring:      params {n}, n >= 3, cycle C_n
///   complete:  params {n}, n >= 1, K_n
///   hypercube: params {d}, d >= 1, Q_d with binary-coordinate numbering
///              (vertex ids are coordinate words, bit i = axis i)
///   torus:     params {d1,...,dk}, grid with wraparound, row-major ids
///              (last dimension varies fastest)
///   mesh:      params {d1,...,dk}, grid without wraparound, row-major ids
Graph generate_topology(TopologyKind kind, const std::vector<int>& params);

TopologyKind topology_kind_from_name(std::string_view name);

/// Induced subgraph on V minus faults. Surviving vertices keep their ids;
/// the vertex count shrinks only when trailing ids are removed.
Graph remove_vertices(const Graph& g, const VertexSet& faults);

bool is_sorted_unique(const VertexSet& s);

/// Space-separated vertex ids ("1 2 4 5").
std::string format_vertex_set(const VertexSet& s);

} // namespace netproj
