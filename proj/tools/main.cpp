// netproj: deterministic analysis of interconnect topologies through the
// projective description of graphs. Every subcommand reads edge-list files,
// prints a text report (or JSON with --json) and exits 0 on success, 2 on
// validation errors, 3 on resource-cap errors.

#include "CLI11.hpp"
#include "json.hpp"

#include "netproj/amdahl.hpp"
#include "netproj/clique.hpp"
#include "netproj/embedding.hpp"
#include "netproj/errors.hpp"
#include "netproj/faults.hpp"
#include "netproj/graph.hpp"
#include "netproj/oracles.hpp"
#include "netproj/projection.hpp"
#include "netproj/reachability.hpp"
#include "netproj/version.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using json = nlohmann::ordered_json;
using namespace netproj;

std::string fmt_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw validation_error("cannot open graph file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return from_edge_list(buffer.str());
}

struct Output {
  bool as_json = false;
  std::string out_path;

  void deliver(const std::string& text, const json& payload) const {
    const std::string body = as_json ? payload.dump(2) + "\n" : text;
    if (out_path.empty()) {
      std::cout << body;
      return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw validation_error("cannot open output file '" + out_path + "'");
    out << body;
  }
};

json report_head(const std::string& command) {
  json j;
  j["command"] = command;
  j["version"] = kVersion;
  return j;
}

json graph_fingerprint(const Graph& g) {
  json j;
  j["n"] = g.vertex_count();
  j["m"] = g.edge_count();
  return j;
}

json edges_json(const Graph& g) {
  json arr = json::array();
  for (auto [u, v] : g.edges()) arr.push_back(json::array({u, v}));
  return arr;
}

std::string vertex_set_or(const VertexSet& vs, const char* when_empty) {
  return vs.empty() ? std::string(when_empty) : format_vertex_set(vs);
}

// ---- gen ----------------------------------------------------------------

void run_gen(const Output& out, const std::string& kind, const std::vector<int>& dims) {
  Graph g = generate_topology(topology_kind_from_name(kind), dims);
  json j = report_head("gen");
  j["kind"] = kind;
  j["params"] = dims;
  j["n"] = g.vertex_count();
  j["m"] = g.edge_count();
  j["edges"] = edges_json(g);
  out.deliver(to_edge_list(g), j);
}

// ---- project ------------------------------------------------------------

void run_project(const Output& out, const std::string& path, Vertex root, int depth,
                 const std::string& mode_name) {
  ProjectionMode mode;
  if (mode_name == "full" || mode_name == "full-chains") mode = ProjectionMode::FullChains;
  else if (mode_name == "shortest" || mode_name == "shortest-only")
    mode = ProjectionMode::ShortestOnly;
  else throw validation_error("unknown projection mode '" + mode_name + "'");
  Graph g = load_graph(path);
  Projection p = build_projection(g, root, depth, mode);
  const std::string bracket = to_bracket(p);
  json j = report_head("project");
  j["graph"] = graph_fingerprint(g);
  j["root"] = root;
  j["depth"] = depth;
  j["mode"] = mode == ProjectionMode::FullChains ? "full-chains" : "shortest-only";
  j["bracket"] = bracket;
  out.deliver(bracket + "\n", j);
}

// ---- metrics ------------------------------------------------------------

void run_metrics(const Output& out, const std::string& path) {
  Graph g = load_graph(path);
  const int diam = diameter(g);
  const auto shortest_cycle = girth(g);
  std::ostringstream text;
  text << "n: " << g.vertex_count() << "\n"
       << "m: " << g.edge_count() << "\n"
       << "degree_min: " << g.min_degree() << "\n"
       << "degree_max: " << g.max_degree() << "\n"
       << "diameter: " << diam << "\n"
       << "girth: " << (shortest_cycle ? std::to_string(*shortest_cycle) : "acyclic") << "\n";
  json j = report_head("metrics");
  j["graph"] = graph_fingerprint(g);
  j["degree_min"] = g.min_degree();
  j["degree_max"] = g.max_degree();
  j["diameter"] = diam;
  j["girth"] = shortest_cycle ? json(*shortest_cycle) : json(nullptr);
  out.deliver(text.str(), j);
}

// ---- reach --------------------------------------------------------------

void run_reach(const Output& out, const std::string& path, int delta) {
  Graph g = load_graph(path);
  ReachGraph rg = compress(g, delta);
  json j = report_head("reach");
  j["graph"] = graph_fingerprint(g);
  j["delta"] = delta;
  j["derived"] = graph_fingerprint(rg.derived);
  j["edges"] = edges_json(rg.derived);
  out.deliver(to_edge_list(rg.derived), j);
}

// ---- clique / density ---------------------------------------------------

void run_clique(const Output& out, const std::string& path) {
  Graph g = load_graph(path);
  CliqueResult r = max_clique(g);
  std::ostringstream text;
  text << "size: " << r.size << "\n"
       << "clique: " << format_vertex_set(r.vertices) << "\n";
  json j = report_head("clique");
  j["graph"] = graph_fingerprint(g);
  j["size"] = r.size;
  j["clique"] = r.vertices;
  out.deliver(text.str(), j);
}

void run_density(const Output& out, const std::string& path, int delta) {
  Graph g = load_graph(path);
  CliqueResult r = delta_density(g, delta);
  std::ostringstream text;
  text << "delta: " << delta << "\n"
       << "phi: " << r.size << "\n"
       << "clique: " << format_vertex_set(r.vertices) << "\n";
  json j = report_head("density");
  j["graph"] = graph_fingerprint(g);
  j["delta"] = delta;
  j["phi"] = r.size;
  j["clique"] = r.vertices;
  out.deliver(text.str(), j);
}

void run_components(const Output& out, const std::string& path, int delta, int min_size) {
  Graph g = load_graph(path);
  auto components = enumerate_delta_components(g, delta, min_size);
  std::ostringstream text;
  text << "delta: " << delta << "\n"
       << "min_size: " << min_size << "\n"
       << "count: " << components.size() << "\n";
  for (const auto& component : components)
    text << "component: " << format_vertex_set(component) << "\n";
  json j = report_head("components");
  j["graph"] = graph_fingerprint(g);
  j["delta"] = delta;
  j["min_size"] = min_size;
  j["count"] = components.size();
  j["components"] = components;
  out.deliver(text.str(), j);
}

// ---- plan ---------------------------------------------------------------

json plan_json(const ParallelPlan& plan) {
  json j;
  j["directive"] = plan.directive.kind == DirectiveKind::Speedup ? "speedup" : "efficiency";
  j["target"] = plan.directive.target;
  j["feasible"] = plan.feasible;
  if (plan.feasible) {
    j["p"] = plan.branches;
    j["L"] = plan.distance;
    j["delta"] = plan.delta;
    j["witness_clique"] = plan.witness.vertices;
  } else {
    j["p"] = nullptr;
    j["L"] = nullptr;
    j["delta"] = nullptr;
    j["witness_clique"] = nullptr;
  }
  return j;
}

std::string plan_text(const ParallelPlan& plan) {
  std::ostringstream text;
  text << "directive: "
       << (plan.directive.kind == DirectiveKind::Speedup ? "speedup" : "efficiency") << "\n"
       << "target: " << fmt_double(plan.directive.target) << "\n"
       << "feasible: " << (plan.feasible ? "yes" : "no") << "\n";
  if (plan.feasible) {
    text << "p: " << plan.branches << "\n"
         << "L: " << fmt_double(plan.distance) << "\n"
         << "delta: " << plan.delta << "\n"
         << "clique: " << format_vertex_set(plan.witness.vertices) << "\n";
  }
  return text.str();
}

void run_plan(const Output& out, const std::string& path, double W, double Q, double alpha,
              double beta, const Directive& directive) {
  Graph g = load_graph(path);
  ParallelPlan plan =
      max_feasible_parallelism(g, TaskVolumes(W, Q), DelayModel(alpha, beta), directive);
  json j = report_head("plan");
  j["graph"] = graph_fingerprint(g);
  j.update(plan_json(plan));
  out.deliver(plan_text(plan), j);
}

// ---- embed / cycles / girth ----------------------------------------------

void run_embed(const Output& out, const std::string& graph_path, const std::string& task_path,
               int delta) {
  Graph system = load_graph(graph_path);
  Graph task = load_graph(task_path);
  auto embedding = embed(task, system, delta);
  std::ostringstream text;
  text << "found: " << (embedding ? "yes" : "no") << "\n";
  json j = report_head("embed");
  j["graph"] = graph_fingerprint(system);
  j["task"] = graph_fingerprint(task);
  j["delta"] = delta;
  j["found"] = embedding.has_value();
  if (embedding) {
    text << "delta: " << delta << "\n";
    json mapping = json::array();
    for (std::size_t t = 0; t < embedding->mapping.size(); ++t) {
      text << "map: " << t << " -> " << embedding->mapping[t] << "\n";
      mapping.push_back(json::array({t, embedding->mapping[t]}));
    }
    j["mapping"] = mapping;
  } else {
    j["mapping"] = nullptr;
  }
  out.deliver(text.str(), j);
}

void run_cycles(const Output& out, const std::string& path, int length) {
  Graph g = load_graph(path);
  auto cycles = enumerate_cycles(g, length);
  std::ostringstream text;
  text << "length: " << length << "\n"
       << "count: " << cycles.size() << "\n";
  for (const auto& cycle : cycles) text << "cycle: " << format_vertex_set(cycle) << "\n";
  json j = report_head("cycles");
  j["graph"] = graph_fingerprint(g);
  j["length"] = length;
  j["count"] = cycles.size();
  j["cycles"] = cycles;
  out.deliver(text.str(), j);
}

void run_girth(const Output& out, const std::string& path) {
  Graph g = load_graph(path);
  const auto shortest_cycle = girth(g);
  json j = report_head("girth");
  j["graph"] = graph_fingerprint(g);
  j["girth"] = shortest_cycle ? json(*shortest_cycle) : json(nullptr);
  out.deliver("girth: " + (shortest_cycle ? std::to_string(*shortest_cycle) : "acyclic") + "\n",
              j);
}

// ---- faults ---------------------------------------------------------------

void run_faults(const Output& out, const std::string& path, int delta, int multiplicity,
                std::optional<int> p) {
  Graph g = load_graph(path);
  std::ostringstream text;
  json j = report_head("faults");
  j["graph"] = graph_fingerprint(g);
  j["delta"] = delta;
  j["f"] = multiplicity;
  text << "delta: " << delta << "\n"
       << "f: " << multiplicity << "\n";
  if (p) {
    ToleranceVerdict verdict = is_fault_tolerant(g, delta, *p, multiplicity);
    text << "p: " << *p << "\n"
         << "tolerant: " << (verdict.tolerant ? "yes" : "no") << "\n";
    if (verdict.counterexample)
      text << "counterexample: " << format_vertex_set(*verdict.counterexample) << "\n";
    text << "examined: " << verdict.examined << "\n";
    j["p"] = *p;
    j["tolerant"] = verdict.tolerant;
    j["counterexample"] =
        verdict.counterexample ? json(*verdict.counterexample) : json(nullptr);
    j["examined"] = verdict.examined;
  } else {
    FaultReport report = worst_case_density(g, delta, multiplicity);
    text << "min_density: " << report.min_density << "\n"
         << "witness: " << vertex_set_or(report.witness, "(empty)") << "\n"
         << "examined: " << report.examined << "\n";
    j["min_density"] = report.min_density;
    j["witness"] = report.witness;
    j["examined"] = report.examined;
  }
  out.deliver(text.str(), j);
}

// ---- compare --------------------------------------------------------------

void run_compare(const Output& out, const std::vector<std::string>& paths, double W, double Q,
                 double alpha, double beta, const std::optional<Directive>& directive) {
  struct Row {
    std::string name;
    Graph g;
    int diam = 0;
    std::optional<int> shortest_cycle;
    std::vector<int> phi;
    std::optional<ParallelPlan> plan;
  };
  std::vector<Row> rows;
  for (const auto& path : paths) {
    Row row;
    row.name = path;
    row.g = load_graph(path);
    row.diam = diameter(row.g);
    row.shortest_cycle = girth(row.g);
    for (int delta = 1; delta <= row.diam; ++delta)
      row.phi.push_back(delta_density(row.g, delta).size);
    if (row.diam == 0) row.phi.push_back(row.g.vertex_count());  // single vertex
    if (directive)
      row.plan = max_feasible_parallelism(row.g, TaskVolumes(W, Q), DelayModel(alpha, beta),
                                          *directive);
    rows.push_back(std::move(row));
  }

  std::vector<std::string> header = {"graph", "n", "degree", "diam", "girth", "phi"};
  if (directive) header.push_back("plan");
  std::vector<std::vector<std::string>> table{header};
  for (const Row& row : rows) {
    std::vector<std::string> cells;
    cells.push_back(row.name);
    cells.push_back(std::to_string(row.g.vertex_count()));
    cells.push_back(std::to_string(row.g.min_degree()) + ".." +
                    std::to_string(row.g.max_degree()));
    cells.push_back(std::to_string(row.diam));
    cells.push_back(row.shortest_cycle ? std::to_string(*row.shortest_cycle) : "acyclic");
    std::string phi;
    for (std::size_t i = 0; i < row.phi.size(); ++i)
      phi += (i ? " " : "") + std::to_string(row.phi[i]);
    cells.push_back(phi);
    if (directive)
      cells.push_back(row.plan->feasible ? "p=" + std::to_string(row.plan->branches) +
                                               " d=" + std::to_string(row.plan->delta)
                                         : "infeasible");
    table.push_back(std::move(cells));
  }
  std::vector<std::size_t> widths(table[0].size(), 0);
  for (const auto& cells : table)
    for (std::size_t c = 0; c < cells.size(); ++c)
      widths[c] = std::max(widths[c], cells[c].size());
  std::ostringstream text;
  for (const auto& cells : table) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) text << "  ";
      text << cells[c];
      if (c + 1 < cells.size()) text << std::string(widths[c] - cells[c].size(), ' ');
    }
    text << "\n";
  }

  json j = report_head("compare");
  json graphs = json::array();
  for (const Row& row : rows) {
    json entry;
    entry["name"] = row.name;
    entry["n"] = row.g.vertex_count();
    entry["m"] = row.g.edge_count();
    entry["degree_min"] = row.g.min_degree();
    entry["degree_max"] = row.g.max_degree();
    entry["diameter"] = row.diam;
    entry["girth"] = row.shortest_cycle ? json(*row.shortest_cycle) : json(nullptr);
    entry["phi"] = row.phi;
    entry["plan"] = row.plan ? plan_json(*row.plan) : json(nullptr);
    graphs.push_back(std::move(entry));
  }
  j["graphs"] = std::move(graphs);
  out.deliver(text.str(), j);
}

// ---- audit ----------------------------------------------------------------

void run_audit(const Output& out, const std::string& path, std::optional<int> delta) {
  Graph g = load_graph(path);
  const int n = g.vertex_count();
  const auto reference = oracle::all_pairs_distances(g);

  bool distances_ok = true;
  for (Vertex root = 0; root < n; ++root) {
    Projection p = build_projection(g, root, std::max(n - 1, 0), ProjectionMode::ShortestOnly);
    for (Vertex v = 0; v < n; ++v) {
      const int expected = reference[static_cast<std::size_t>(root)][static_cast<std::size_t>(v)];
      if (p.first_level(v) != (expected == oracle::kUnreachable ? -1 : expected))
        distances_ok = false;
    }
  }

  const bool clique_ok =
      n > 0 && max_clique(g).vertices == oracle::max_clique(g);

  int max_finite = 1;
  for (const auto& row : reference)
    for (int d : row)
      if (d != oracle::kUnreachable) max_finite = std::max(max_finite, d);
  std::vector<int> deltas;
  if (delta) deltas.push_back(*delta);
  else
    for (int d = 1; d <= max_finite; ++d) deltas.push_back(d);
  bool compress_ok = true;
  for (int d : deltas) {
    Graph derived = compress(g, d).derived;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) {
        const int ref = reference[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
        const bool expected = ref != oracle::kUnreachable && ref >= 1 && ref <= d;
        if (derived.has_edge(u, v) != expected) compress_ok = false;
      }
  }

  std::optional<bool> embed_ok;
  if (n <= oracle::kMaxEmbedSystemVertices) {
    embed_ok = true;
    const int d = delta.value_or(1);
    const std::vector<Graph> tasks = {
        generate_topology(TopologyKind::Complete, {3}),
        generate_topology(TopologyKind::Ring, {4}),
        Graph(4, {{0, 1}, {1, 2}, {2, 3}}),
        generate_topology(TopologyKind::Complete, {4}),
    };
    for (const Graph& task : tasks)
      if (embed(task, g, d).has_value() != oracle::embed(task, g, d).has_value())
        embed_ok = false;
  }

  const bool agreement =
      distances_ok && clique_ok && compress_ok && embed_ok.value_or(true);

  std::ostringstream text;
  text << "n: " << n << "\n"
       << "m: " << g.edge_count() << "\n"
       << "distances: " << (distances_ok ? "ok" : "mismatch") << "\n"
       << "clique: " << (clique_ok ? "ok" : "mismatch") << "\n"
       << "compress: " << (compress_ok ? "ok" : "mismatch") << "\n"
       << "embed: " << (embed_ok ? (*embed_ok ? "ok" : "mismatch") : "skipped") << "\n"
       << "agreement: " << (agreement ? "yes" : "no") << "\n";
  json j = report_head("audit");
  j["graph"] = graph_fingerprint(g);
  j["delta"] = delta ? json(*delta) : json(nullptr);
  json checks;
  checks["distances"] = distances_ok;
  checks["clique"] = clique_ok;
  checks["compress"] = compress_ok;
  checks["embed"] = embed_ok ? json(*embed_ok) : json(nullptr);
  j["checks"] = std::move(checks);
  j["agreement"] = agreement;
  out.deliver(text.str(), j);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"netproj: projective analysis of interconnect topologies"};
  app.require_subcommand(1);

  Output out;
  app.add_flag("--json", out.as_json, "Emit a JSON report instead of text");
  app.add_option("--out", out.out_path, "Write the report to a file instead of stdout");

  // gen
  std::string gen_kind;
  std::vector<int> gen_dims;
  auto* gen = app.add_subcommand("gen", "Generate a standard topology as an edge list");
  gen->add_option("--kind", gen_kind, "ring | complete | hypercube | torus | mesh")->required();
  gen->add_option("--dims", gen_dims, "Dimension sizes (one value, or several for torus/mesh)")
      ->required();

  // project
  std::string project_graph, project_mode = "full";
  int project_root = 0, project_depth = 1;
  auto* project = app.add_subcommand("project", "Bracket projection from an angle vertex");
  project->add_option("--graph", project_graph, "Edge-list file")->required();
  project->add_option("--root", project_root, "Angle vertex")->required();
  project->add_option("--depth", project_depth, "Projection depth")->required();
  project->add_option("--mode", project_mode, "full | shortest");

  // metrics
  std::string metrics_graph;
  auto* metrics = app.add_subcommand("metrics", "Order, size, degrees, diameter, girth");
  metrics->add_option("--graph", metrics_graph, "Edge-list file")->required();

  // reach
  std::string reach_graph;
  int reach_delta = 1;
  auto* reach = app.add_subcommand("reach", "Delta-reachability graph as an edge list");
  reach->add_option("--graph", reach_graph, "Edge-list file")->required();
  reach->add_option("--delta", reach_delta, "Reachability bound")->required();

  // clique
  std::string clique_graph;
  auto* clique = app.add_subcommand("clique", "Maximum clique of the graph");
  clique->add_option("--graph", clique_graph, "Edge-list file")->required();

  // density
  std::string density_graph;
  int density_delta = 1;
  auto* density = app.add_subcommand("density", "Delta-density: maximum clique under reachability");
  density->add_option("--graph", density_graph, "Edge-list file")->required();
  density->add_option("--delta", density_delta, "Reachability bound")->required();

  // components
  std::string components_graph;
  int components_delta = 1, components_min = 1;
  auto* components =
      app.add_subcommand("components", "Maximal delta-components (cliques under reachability)");
  components->add_option("--graph", components_graph, "Edge-list file")->required();
  components->add_option("--delta", components_delta, "Reachability bound")->required();
  components->add_option("--min-size", components_min, "Smallest component to report");

  // plan
  std::string plan_graph;
  double plan_W = 0, plan_Q = 0, plan_alpha = 0, plan_beta = 0;
  double plan_speedup = 0, plan_efficiency = 0;
  auto* plan = app.add_subcommand("plan", "Largest feasible branch count for a directive");
  plan->add_option("--graph", plan_graph, "Edge-list file")->required();
  plan->add_option("--W", plan_W, "Total computation volume")->required();
  plan->add_option("--Q", plan_Q, "Total exchange volume")->required();
  plan->add_option("--alpha", plan_alpha, "Delay latency term")->required();
  plan->add_option("--beta", plan_beta, "Delay per-byte term")->required();
  auto* plan_s = plan->add_option("--speedup", plan_speedup, "Speedup target");
  auto* plan_e = plan->add_option("--efficiency", plan_efficiency, "Efficiency target");
  plan_s->excludes(plan_e);
  plan_e->excludes(plan_s);

  // embed
  std::string embed_graph, embed_task;
  int embed_delta = 1;
  auto* embed_cmd = app.add_subcommand("embed", "Embed a task information graph");
  embed_cmd->add_option("--graph", embed_graph, "System edge-list file")->required();
  embed_cmd->add_option("--task", embed_task, "Task edge-list file")->required();
  embed_cmd->add_option("--delta", embed_delta, "Reachability bound");

  // cycles
  std::string cycles_graph;
  int cycles_length = 3;
  auto* cycles = app.add_subcommand("cycles", "Simple cycles of a fixed length");
  cycles->add_option("--graph", cycles_graph, "Edge-list file")->required();
  cycles->add_option("--length", cycles_length, "Cycle length")->required();

  // girth
  std::string girth_graph;
  auto* girth_cmd = app.add_subcommand("girth", "Shortest cycle length");
  girth_cmd->add_option("--graph", girth_graph, "Edge-list file")->required();

  // faults
  std::string faults_graph;
  int faults_delta = 1, faults_f = 0, faults_p = 0;
  auto* faults = app.add_subcommand("faults", "Worst-case density under vertex faults");
  faults->add_option("--graph", faults_graph, "Edge-list file")->required();
  faults->add_option("--delta", faults_delta, "Reachability bound")->required();
  faults->add_option("--f", faults_f, "Fault multiplicity")->required();
  auto* faults_p_opt = faults->add_option("--p", faults_p, "Required parallelism (early exit)");

  // compare
  std::vector<std::string> compare_graphs;
  double cmp_W = 0, cmp_Q = 0, cmp_alpha = 0, cmp_beta = 0, cmp_speedup = 0, cmp_efficiency = 0;
  auto* compare = app.add_subcommand("compare", "Side-by-side topology table");
  compare->add_option("--graph", compare_graphs, "Edge-list files")->required();
  compare->add_option("--W", cmp_W, "Total computation volume");
  compare->add_option("--Q", cmp_Q, "Total exchange volume");
  compare->add_option("--alpha", cmp_alpha, "Delay latency term");
  compare->add_option("--beta", cmp_beta, "Delay per-byte term");
  auto* cmp_s = compare->add_option("--speedup", cmp_speedup, "Speedup target");
  auto* cmp_e = compare->add_option("--efficiency", cmp_efficiency, "Efficiency target");
  cmp_s->excludes(cmp_e);
  cmp_e->excludes(cmp_s);

  // audit
  std::string audit_graph;
  int audit_delta = 0;
  auto* audit = app.add_subcommand("audit", "Cross-check the fast path against the oracles");
  audit->add_option("--graph", audit_graph, "Edge-list file")->required();
  auto* audit_delta_opt = audit->add_option("--delta", audit_delta, "Reachability bound");

  try {
    app.parse(argc, argv);

    if (gen->parsed()) run_gen(out, gen_kind, gen_dims);
    else if (project->parsed()) run_project(out, project_graph, project_root, project_depth,
                                            project_mode);
    else if (metrics->parsed()) run_metrics(out, metrics_graph);
    else if (reach->parsed()) run_reach(out, reach_graph, reach_delta);
    else if (clique->parsed()) run_clique(out, clique_graph);
    else if (density->parsed()) run_density(out, density_graph, density_delta);
    else if (components->parsed())
      run_components(out, components_graph, components_delta, components_min);
    else if (plan->parsed()) {
      if (plan_s->count() == 0 && plan_e->count() == 0)
        throw validation_error("plan needs exactly one of --speedup or --efficiency");
      const Directive directive = plan_s->count()
                                      ? Directive{DirectiveKind::Speedup, plan_speedup}
                                      : Directive{DirectiveKind::Efficiency, plan_efficiency};
      run_plan(out, plan_graph, plan_W, plan_Q, plan_alpha, plan_beta, directive);
    } else if (embed_cmd->parsed()) run_embed(out, embed_graph, embed_task, embed_delta);
    else if (cycles->parsed()) run_cycles(out, cycles_graph, cycles_length);
    else if (girth_cmd->parsed()) run_girth(out, girth_graph);
    else if (faults->parsed())
      run_faults(out, faults_graph, faults_delta, faults_f,
                 faults_p_opt->count() ? std::optional<int>(faults_p) : std::nullopt);
    else if (compare->parsed()) {
      std::optional<Directive> directive;
      if (cmp_s->count()) directive = Directive{DirectiveKind::Speedup, cmp_speedup};
      else if (cmp_e->count()) directive = Directive{DirectiveKind::Efficiency, cmp_efficiency};
      run_compare(out, compare_graphs, cmp_W, cmp_Q, cmp_alpha, cmp_beta, directive);
    } else if (audit->parsed())
      run_audit(out, audit_graph,
                audit_delta_opt->count() ? std::optional<int>(audit_delta) : std::nullopt);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n"
              << "run '" << (argv && argv[0] ? argv[0] : "netproj")
              << " --help' for usage\n";
    return 2;
  } catch (const resource_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const netproj::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
