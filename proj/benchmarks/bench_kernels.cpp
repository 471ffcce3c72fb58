// Serial reference vs OpenMP kernels on fixed mid-size instances.

#include <benchmark/benchmark.h>

#include "atgraph/coefficient.hpp"
#include "atgraph/eulerian.hpp"
#include "atgraph/transforms.hpp"

using namespace atgraph;

namespace {

// Directed torus: every vertex outdegree 2, Eulerian-subdigraph rich.
Orientation directed_torus(int rows, int cols) {
  Graph torus = cartesian(cycle(rows), cycle(cols));
  std::vector<Arc> arcs;
  for (const Edge& e : torus.edges()) {
    int ru = e.u % rows, cu = e.u / rows;
    int rv = e.v % rows, cv = e.v / rows;
    if (cu == cv) {
      // ring edge inside a column: forward along the ring
      if ((ru + 1) % rows == rv)
        arcs.push_back({e.u, e.v});
      else
        arcs.push_back({e.v, e.u});
    } else {
      if ((cu + 1) % cols == cv)
        arcs.push_back({e.u, e.v});
      else
        arcs.push_back({e.v, e.u});
    }
  }
  return make_orientation(torus, arcs);
}

const Orientation& torus_instance() {
  static Orientation d = directed_torus(4, 4);  // 32 arcs
  return d;
}

const Graph& coeff_instance() {
  static Graph g = f_sum(path(4), path(4), FKind::T);  // 28 vertices, 56 edges
  return g;
}

void BM_eulerian_diff_serial(benchmark::State& state) {
  const Orientation& d = torus_instance();
  DiffOptions opts;
  for (auto _ : state) {
    auto r = eulerian_diff_serial(d, opts);
    benchmark::DoNotOptimize(r.even_count);
  }
}

void BM_eulerian_diff_parallel(benchmark::State& state) {
  const Orientation& d = torus_instance();
  DiffOptions opts;
  for (auto _ : state) {
    auto r = eulerian_diff(d, opts);
    benchmark::DoNotOptimize(r.even_count);
  }
}

void BM_coefficient_serial(benchmark::State& state) {
  const Graph& g = coeff_instance();
  std::vector<int> targets(static_cast<size_t>(g.order()), 2);
  for (auto _ : state) {
    auto c = monomial_coefficient_serial(g, targets);
    benchmark::DoNotOptimize(c);
  }
}

void BM_coefficient_parallel(benchmark::State& state) {
  const Graph& g = coeff_instance();
  std::vector<int> targets(static_cast<size_t>(g.order()), 2);
  for (auto _ : state) {
    auto c = monomial_coefficient(g, targets);
    benchmark::DoNotOptimize(c);
  }
}

}  // namespace

BENCHMARK(BM_eulerian_diff_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_eulerian_diff_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_coefficient_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_coefficient_parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
