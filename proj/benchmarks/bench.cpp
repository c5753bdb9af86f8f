#include <benchmark/benchmark.h>

#include "netproj/clique.hpp"
#include "netproj/embedding.hpp"
#include "netproj/graph.hpp"
#include "netproj/projection.hpp"
#include "netproj/reachability.hpp"

using namespace netproj;

namespace {

void BM_ShortestProjection(benchmark::State& state) {
  const Graph g = generate_topology(TopologyKind::Torus,
                                    {static_cast<int>(state.range(0)),
                                     static_cast<int>(state.range(0))});
  for (auto _ : state) {
    Projection p = build_projection(g, 0, g.vertex_count() - 1, ProjectionMode::ShortestOnly);
    benchmark::DoNotOptimize(p.levels());
  }
}
BENCHMARK(BM_ShortestProjection)->Arg(8)->Arg(16)->Arg(32);

void BM_FullChainsProjection(benchmark::State& state) {
  const Graph g = generate_topology(TopologyKind::Hypercube,
                                    {static_cast<int>(state.range(0))});
  for (auto _ : state) {
    Projection p = build_projection(g, 0, 3, ProjectionMode::FullChains);
    benchmark::DoNotOptimize(p.node_count());
  }
}
BENCHMARK(BM_FullChainsProjection)->Arg(4)->Arg(6)->Arg(8);

void BM_Compress(benchmark::State& state) {
  const Graph g = generate_topology(TopologyKind::Torus,
                                    {static_cast<int>(state.range(0)),
                                     static_cast<int>(state.range(0))});
  for (auto _ : state) {
    ReachGraph rg = compress(g, 2);
    benchmark::DoNotOptimize(rg.derived.edge_count());
  }
}
BENCHMARK(BM_Compress)->Arg(8)->Arg(16)->Arg(32);

void BM_MaxClique(benchmark::State& state) {
  const Graph g = compress(generate_topology(TopologyKind::Hypercube,
                                             {static_cast<int>(state.range(0))}),
                           2)
                      .derived;
  for (auto _ : state) {
    CliqueResult r = max_clique(g);
    benchmark::DoNotOptimize(r.size);
  }
}
BENCHMARK(BM_MaxClique)->Arg(4)->Arg(5)->Arg(6);

void BM_Diameter(benchmark::State& state) {
  const Graph g = generate_topology(TopologyKind::Torus,
                                    {static_cast<int>(state.range(0)),
                                     static_cast<int>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(diameter(g));
}
BENCHMARK(BM_Diameter)->Arg(8)->Arg(16);

void BM_CycleEnumeration(benchmark::State& state) {
  const Graph g = generate_topology(TopologyKind::Hypercube, {4});
  for (auto _ : state) {
    auto cycles = enumerate_cycles(g, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(cycles.size());
  }
}
BENCHMARK(BM_CycleEnumeration)->Arg(4)->Arg(6)->Arg(8);

} // namespace

BENCHMARK_MAIN();
