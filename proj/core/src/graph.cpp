#include "netproj/graph.hpp"

#include "netproj/errors.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace netproj {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))) {
  if (n < 0) throw validation_error("vertex count must be non-negative");
}

Graph::Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) : Graph(n) {
  for (auto [u, v] : edges) {
    if (!has_vertex(u) || !has_vertex(v))
      throw validation_error("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                             ") outside vertex range 0.." + std::to_string(n - 1));
    if (u == v) throw validation_error("self-loop at vertex " + std::to_string(u));
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& nbrs : adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    m_ += nbrs.size();
  }
  m_ /= 2;
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
  if (!has_vertex(v)) throw validation_error("vertex " + std::to_string(v) + " out of range");
  return adj_[static_cast<std::size_t>(v)];
}

int Graph::degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!has_vertex(u) || !has_vertex(v)) return false;
  const auto& nbrs = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : adj_[static_cast<std::size_t>(u)])
      if (u < v) out.emplace_back(u, v);
  return out;
}

int Graph::min_degree() const {
  if (n_ == 0) throw validation_error("empty graph has no degrees");
  int best = degree(0);
  for (Vertex v = 1; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

int Graph::max_degree() const {
  if (n_ == 0) throw validation_error("empty graph has no degrees");
  int best = degree(0);
  for (Vertex v = 1; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

namespace {

bool parse_int(std::string_view tok, int& out) {
  if (tok.empty()) return false;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc{} && ptr == tok.data() + tok.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) toks.push_back(line.substr(i, j - i));
    i = j;
  }
  return toks;
}

} // namespace

Graph from_edge_list(std::string_view text) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  int declared_n = -1;
  bool saw_content = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (!saw_content && toks.size() == 1 && toks[0].starts_with("n=")) {
      if (!parse_int(toks[0].substr(2), declared_n) || declared_n < 0)
        throw parse_error("line " + std::to_string(line_no) + ": bad vertex-count header '" +
                          std::string(toks[0]) + "'");
      saw_content = true;
      continue;
    }
    saw_content = true;
    int u = 0, v = 0;
    if (toks.size() != 2 || !parse_int(toks[0], u) || !parse_int(toks[1], v) || u < 0 || v < 0)
      throw parse_error("line " + std::to_string(line_no) +
                        ": expected two non-negative integers 'u v'");
    if (u == v)
      throw validation_error("line " + std::to_string(line_no) + ": self-loop (" +
                             std::to_string(u) + " " + std::to_string(v) + ")");
    edges.emplace_back(u, v);
  }
  int n = declared_n;
  for (auto [u, v] : edges) n = std::max({n, u + 1, v + 1});
  return Graph(std::max(n, 0), edges);
}

std::string to_edge_list(const Graph& g) {
  auto es = g.edges();
  Vertex max_mentioned = -1;
  for (auto [u, v] : es) max_mentioned = std::max(max_mentioned, v);
  std::string out;
  if (g.vertex_count() > 0 && max_mentioned + 1 < g.vertex_count())
    out += "n=" + std::to_string(g.vertex_count()) + "\n";
  for (auto [u, v] : es) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

namespace {

Graph make_ring(int n) {
  if (n < 3) throw validation_error("ring needs n >= 3");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph make_complete(int n) {
  if (n < 1) throw validation_error("complete graph needs n >= 1");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph make_hypercube(int d) {
  if (d < 1) throw validation_error("hypercube needs dimension d >= 1");
  if (d >= 30) throw validation_error("hypercube dimension too large");
  int n = 1 << d;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int u = 0; u < n; ++u)
    for (int bit = 0; bit < d; ++bit) {
      int v = u ^ (1 << bit);
      if (u < v) edges.emplace_back(u, v);
    }
  return Graph(n, edges);
}

// Row-major grid numbering: the last dimension varies fastest.
Graph make_grid(const std::vector<int>& dims, bool wrap) {
  if (dims.empty()) throw validation_error("grid needs at least one dimension");
  long long n = 1;
  for (int d : dims) {
    if (d < 1) throw validation_error("grid dimensions must be positive");
    n *= d;
    if (n > 1'000'000'000) throw validation_error("grid too large");
  }
  std::vector<long long> stride(dims.size());
  stride[dims.size() - 1] = 1;
  for (std::size_t i = dims.size() - 1; i > 0; --i)
    stride[i - 1] = stride[i] * dims[i];
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<int> coord(dims.size(), 0);
  for (long long id = 0; id < n; ++id) {
    for (std::size_t ax = 0; ax < dims.size(); ++ax) {
      if (dims[ax] == 1) continue;
      if (coord[ax] + 1 < dims[ax]) {
        edges.emplace_back(static_cast<int>(id), static_cast<int>(id + stride[ax]));
      } else if (wrap && dims[ax] > 2) {
        edges.emplace_back(static_cast<int>(id), static_cast<int>(id - coord[ax] * stride[ax]));
      }
    }
    for (std::size_t ax = dims.size(); ax-- > 0;) {
      if (++coord[ax] < dims[ax]) break;
      coord[ax] = 0;
    }
  }
  return Graph(static_cast<int>(n), edges);
}

} // namespace

Graph generate_topology(TopologyKind kind, const std::vector<int>& params) {
  switch (kind) {
    case TopologyKind::Ring:
      if (params.size() != 1) throw validation_error("ring takes one parameter");
      return make_ring(params[0]);
    case TopologyKind::Complete:
      if (params.size() != 1) throw validation_error("complete takes one parameter");
      return make_complete(params[0]);
    case TopologyKind::Hypercube:
      if (params.size() != 1) throw validation_error("hypercube takes one parameter");
      return make_hypercube(params[0]);
    case TopologyKind::Torus:
      return make_grid(params, true);
    case TopologyKind::Mesh:
      return make_grid(params, false);
  }
  throw validation_error("unknown topology kind");
}

TopologyKind topology_kind_from_name(std::string_view name) {
  if (name == "ring") return TopologyKind::Ring;
  if (name == "complete") return TopologyKind::Complete;
  if (name == "hypercube") return TopologyKind::Hypercube;
  if (name == "torus") return TopologyKind::Torus;
  if (name == "mesh") return TopologyKind::Mesh;
  throw validation_error("unknown topology kind '" + std::string(name) + "'");
}

Graph remove_vertices(const Graph& g, const VertexSet& faults) {
  if (!is_sorted_unique(faults)) throw validation_error("fault set must be sorted and duplicate-free");
  for (Vertex v : faults)
    if (!g.has_vertex(v)) throw validation_error("fault vertex " + std::to_string(v) + " out of range");
  std::vector<bool> dead(static_cast<std::size_t>(g.vertex_count()), false);
  for (Vertex v : faults) dead[static_cast<std::size_t>(v)] = true;
  int n = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!dead[static_cast<std::size_t>(v)]) n = v + 1;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (auto [u, v] : g.edges())
    if (!dead[static_cast<std::size_t>(u)] && !dead[static_cast<std::size_t>(v)])
      edges.emplace_back(u, v);
  return Graph(n, edges);
}

bool is_sorted_unique(const VertexSet& s) {
  return std::adjacent_find(s.begin(), s.end(),
                            [](Vertex a, Vertex b) { return a >= b; }) == s.end();
}

std::string format_vertex_set(const VertexSet& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(s[i]);
  }
  return out;
}

} // namespace netproj
