#include "netproj/projection.hpp"

#include "netproj/errors.hpp"

#include <algorithm>
#include <charconv>
#include <queue>

namespace netproj {

namespace {

constexpr Vertex kMaxParsedVertex = 10'000'000;

} // namespace

Projection::Projection(int depth, ProjectionMode mode, std::vector<ProjectionNode> nodes)
    : depth_(depth), mode_(mode), nodes_(std::move(nodes)) {
  if (nodes_.empty()) throw validation_error("projection needs at least the angle vertex");
  int max_level = 0;
  Vertex max_vertex = 0;
  for (const auto& node : nodes_) {
    max_level = std::max(max_level, node.level);
    max_vertex = std::max(max_vertex, node.vertex);
  }
  level_counts_.assign(static_cast<std::size_t>(max_level) + 1, 0);
  level_vertices_.assign(static_cast<std::size_t>(max_level) + 1, {});
  first_levels_.assign(static_cast<std::size_t>(max_vertex) + 1, -1);
  for (const auto& node : nodes_) {
    auto lvl = static_cast<std::size_t>(node.level);
    ++level_counts_[lvl];
    level_vertices_[lvl].push_back(node.vertex);
    int& first = first_levels_[static_cast<std::size_t>(node.vertex)];
    if (first < 0 || node.level < first) first = node.level;
  }
  for (auto& vs : level_vertices_) {
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  }
}

std::size_t Projection::level_count(int level) const {
  if (level < 0 || level >= levels()) return 0;
  return level_counts_[static_cast<std::size_t>(level)];
}

const VertexSet& Projection::level_vertices(int level) const {
  static const VertexSet empty;
  if (level < 0 || level >= levels()) return empty;
  return level_vertices_[static_cast<std::size_t>(level)];
}

int Projection::first_level(Vertex v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= first_levels_.size()) return -1;
  return first_levels_[static_cast<std::size_t>(v)];
}

std::vector<Vertex> Projection::chain_to(int node_index) const {
  if (node_index < 0 || static_cast<std::size_t>(node_index) >= nodes_.size())
    throw validation_error("node index out of range");
  std::vector<Vertex> chain;
  for (int i = node_index; i >= 0; i = nodes_[static_cast<std::size_t>(i)].parent)
    chain.push_back(nodes_[static_cast<std::size_t>(i)].vertex);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

namespace {

std::vector<ProjectionNode> build_full_chains(const Graph& g, Vertex root, int depth,
                                              std::size_t node_cap) {
  std::vector<ProjectionNode> nodes;
  nodes.push_back({root, -1, 0, {}});
  std::vector<char> on_chain(static_cast<std::size_t>(g.vertex_count()), 0);
  on_chain[static_cast<std::size_t>(root)] = 1;

  struct Frame {
    int node;
    std::size_t cursor;
  };
  std::vector<Frame> stack{{0, 0}};
  while (!stack.empty()) {
    Frame& f = stack.back();
    const Vertex v = nodes[static_cast<std::size_t>(f.node)].vertex;
    const int level = nodes[static_cast<std::size_t>(f.node)].level;
    const auto& nbrs = g.neighbors(v);
    if (level >= depth || f.cursor >= nbrs.size()) {
      on_chain[static_cast<std::size_t>(v)] = 0;
      stack.pop_back();
      continue;
    }
    const Vertex w = nbrs[f.cursor++];
    if (on_chain[static_cast<std::size_t>(w)]) continue;
    if (nodes.size() >= node_cap)
      throw resource_error("projection node cap of " + std::to_string(node_cap) +
                           " nodes exceeded; lower the depth or raise the cap");
    const int idx = static_cast<int>(nodes.size());
    nodes.push_back({w, f.node, level + 1, {}});
    nodes[static_cast<std::size_t>(f.node)].children.push_back(idx);
    on_chain[static_cast<std::size_t>(w)] = 1;
    stack.push_back({idx, 0});
  }
  return nodes;
}

std::vector<ProjectionNode> build_shortest_only(const Graph& g, Vertex root, int depth) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> dist(n, -1);
  dist[static_cast<std::size_t>(root)] = 0;
  std::queue<Vertex> frontier;
  frontier.push(root);
  while (!frontier.empty()) {
    Vertex v = frontier.front();
    frontier.pop();
    if (dist[static_cast<std::size_t>(v)] >= depth) continue;
    for (Vertex w : g.neighbors(v))
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
        frontier.push(w);
      }
  }

  // One node per reached vertex, under its smallest previous-level neighbor.
  std::vector<std::vector<Vertex>> child_vertices(n);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const int dv = dist[static_cast<std::size_t>(v)];
    if (v == root || dv < 0) continue;
    for (Vertex u : g.neighbors(v))
      if (dist[static_cast<std::size_t>(u)] == dv - 1) {
        child_vertices[static_cast<std::size_t>(u)].push_back(v);
        break;  // neighbors ascend, so the first hit is the smallest parent
      }
  }

  std::vector<ProjectionNode> nodes;
  nodes.push_back({root, -1, 0, {}});
  struct Frame {
    int node;
    std::size_t cursor;
  };
  std::vector<Frame> stack{{0, 0}};
  while (!stack.empty()) {
    Frame& f = stack.back();
    const Vertex v = nodes[static_cast<std::size_t>(f.node)].vertex;
    const auto& kids = child_vertices[static_cast<std::size_t>(v)];
    if (f.cursor >= kids.size()) {
      stack.pop_back();
      continue;
    }
    const Vertex w = kids[f.cursor++];
    const int idx = static_cast<int>(nodes.size());
    nodes.push_back({w, f.node, nodes[static_cast<std::size_t>(f.node)].level + 1, {}});
    nodes[static_cast<std::size_t>(f.node)].children.push_back(idx);
    stack.push_back({idx, 0});
  }
  return nodes;
}

} // namespace

Projection build_projection(const Graph& g, Vertex root, int depth, ProjectionMode mode,
                            std::size_t node_cap) {
  if (!g.has_vertex(root))
    throw validation_error("angle vertex " + std::to_string(root) + " out of range");
  if (depth < 0) throw validation_error("projection depth must be non-negative");
  depth = std::min(depth, g.vertex_count() - 1);
  switch (mode) {
    case ProjectionMode::FullChains:
      return Projection(depth, mode, build_full_chains(g, root, depth, node_cap));
    case ProjectionMode::ShortestOnly:
      return Projection(depth, mode, build_shortest_only(g, root, depth));
    case ProjectionMode::Parsed:
      break;
  }
  throw validation_error("projections are built in full-chains or shortest-only mode");
}

std::string to_bracket(const Projection& p) {
  const auto& nodes = p.nodes();
  std::string out;
  // Preorder walk; an entry with child_pos == children.size() emits closers.
  struct Frame {
    int node;
    std::size_t child_pos;
  };
  std::vector<Frame> stack{{0, 0}};
  out += std::to_string(nodes[0].vertex);
  while (!stack.empty()) {
    Frame& f = stack.back();
    const auto& node = nodes[static_cast<std::size_t>(f.node)];
    if (node.children.empty()) {
      stack.pop_back();
      continue;
    }
    if (f.child_pos == node.children.size()) {
      out += ')';
      stack.pop_back();
      continue;
    }
    out += f.child_pos == 0 ? '(' : ',';
    const int child = node.children[f.child_pos++];
    out += std::to_string(nodes[static_cast<std::size_t>(child)].vertex);
    stack.push_back({child, 0});
  }
  return out;
}

namespace {

struct BracketParser {
  std::string_view text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw parse_error("bracket parse error at offset " + std::to_string(pos) + ": " + what);
  }

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' ||
                                 text[pos] == '\r'))
      ++pos;
  }

  bool peek(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }

  Vertex parse_vertex() {
    skip_ws();
    if (pos >= text.size() || text[pos] < '0' || text[pos] > '9')
      fail("expected a vertex id");
    Vertex value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc{}) fail("vertex id out of range");
    if (value > kMaxParsedVertex) fail("vertex id exceeds " + std::to_string(kMaxParsedVertex));
    pos = static_cast<std::size_t>(ptr - text.data());
    return value;
  }
};

} // namespace

Projection parse_bracket(std::string_view text) {
  BracketParser p{text};
  std::vector<ProjectionNode> nodes;

  p.skip_ws();
  if (p.pos >= text.size()) p.fail("empty input");
  nodes.push_back({p.parse_vertex(), -1, 0, {}});

  std::vector<int> chain{0};  // open node indices, root to current
  std::vector<Vertex> chain_vertices{nodes[0].vertex};
  if (p.peek('(')) {
    ++p.pos;
    while (true) {
      if (p.peek(')')) p.fail("empty generated subset");
      if (p.peek(',')) p.fail("missing vertex before ','");
      const Vertex v = p.parse_vertex();
      const int parent = chain.back();
      if (std::find(chain_vertices.begin(), chain_vertices.end(), v) != chain_vertices.end())
        throw validation_error("vertex " + std::to_string(v) +
                               " repeats along its own chain; projections hold simple chains");
      for (int sibling : nodes[static_cast<std::size_t>(parent)].children)
        if (nodes[static_cast<std::size_t>(sibling)].vertex == v)
          throw validation_error("duplicate vertex " + std::to_string(v) +
                                 " in one generated subset");
      const int idx = static_cast<int>(nodes.size());
      nodes.push_back({v, parent, nodes[static_cast<std::size_t>(parent)].level + 1, {}});
      nodes[static_cast<std::size_t>(parent)].children.push_back(idx);

      if (p.peek('(')) {
        ++p.pos;
        chain.push_back(idx);
        chain_vertices.push_back(v);
        continue;
      }
      while (p.peek(')')) {
        ++p.pos;
        if (chain.size() == 1) p.fail("unbalanced ')'");
        chain.pop_back();
        chain_vertices.pop_back();
      }
      if (p.peek(',')) {
        ++p.pos;
        continue;
      }
      break;
    }
    if (chain.size() != 1) p.fail("missing ')'");
  }
  p.skip_ws();
  if (p.pos < text.size()) p.fail("trailing input");

  // Canonical sibling order is ascending by vertex.
  for (auto& node : nodes)
    std::sort(node.children.begin(), node.children.end(), [&](int a, int b) {
      return nodes[static_cast<std::size_t>(a)].vertex < nodes[static_cast<std::size_t>(b)].vertex;
    });
  int max_level = 0;
  for (const auto& node : nodes) max_level = std::max(max_level, node.level);
  return Projection(max_level, ProjectionMode::Parsed, std::move(nodes));
}

std::optional<int> vertex_complete_level(const Projection& p, const Graph& g) {
  for (const auto& node : p.nodes())
    if (!g.has_vertex(node.vertex))
      throw validation_error("projection vertex " + std::to_string(node.vertex) +
                             " is not a vertex of the graph");
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  int covered = 0;
  for (int level = 0; level < p.levels(); ++level) {
    for (Vertex v : p.level_vertices(level))
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        ++covered;
      }
    if (covered == g.vertex_count()) return level;
  }
  return std::nullopt;
}

bool is_edge_complete(const Projection& p, const Graph& g) {
  const auto n = static_cast<long long>(g.vertex_count());
  for (const auto& node : p.nodes())
    if (!g.has_vertex(node.vertex))
      throw validation_error("projection vertex " + std::to_string(node.vertex) +
                             " is not a vertex of the graph");
  std::vector<long long> covered;
  covered.reserve(p.node_count());
  const auto& nodes = p.nodes();
  for (const auto& node : nodes) {
    if (node.parent < 0) continue;
    Vertex a = nodes[static_cast<std::size_t>(node.parent)].vertex;
    Vertex b = node.vertex;
    if (a > b) std::swap(a, b);
    covered.push_back(a * n + b);
  }
  std::sort(covered.begin(), covered.end());
  covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
  if (covered.size() != g.edge_count()) return false;
  for (auto [u, v] : g.edges())
    if (!std::binary_search(covered.begin(), covered.end(), u * n + v)) return false;
  return true;
}

std::vector<std::size_t> multiplicity(const Projection& p, Vertex v) {
  if (p.mode() == ProjectionMode::ShortestOnly)
    throw unsupported_mode_error(
        "multiplicities need a chain-enumerating projection; rebuild in full-chains mode");
  std::vector<std::size_t> counts(static_cast<std::size_t>(p.levels()), 0);
  for (const auto& node : p.nodes())
    if (node.vertex == v) ++counts[static_cast<std::size_t>(node.level)];
  return counts;
}

namespace {

// Shortest-only projection from root covering the whole graph; throws when
// some vertex stays unreachable.
Projection complete_projection_from(const Graph& g, Vertex root) {
  if (g.vertex_count() == 0) throw validation_error("empty graph");
  Projection p = build_projection(g, root, g.vertex_count() - 1, ProjectionMode::ShortestOnly);
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (p.first_level(v) < 0)
      throw validation_error("graph is disconnected: vertex " + std::to_string(v) +
                             " is unreachable from " + std::to_string(root));
  return p;
}

} // namespace

int distance(const Graph& g, Vertex u, Vertex v) {
  if (!g.has_vertex(u) || !g.has_vertex(v)) throw validation_error("vertex out of range");
  return complete_projection_from(g, u).first_level(v);
}

int eccentricity(const Graph& g, Vertex v) {
  if (!g.has_vertex(v)) throw validation_error("vertex out of range");
  Projection p = complete_projection_from(g, v);
  auto k_e = vertex_complete_level(p, g);
  return *k_e;  // completeness guaranteed above
}

int diameter(const Graph& g) {
  if (g.vertex_count() == 0) throw validation_error("empty graph");
  int best = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) best = std::max(best, eccentricity(g, v));
  return best;
}

} // namespace netproj
