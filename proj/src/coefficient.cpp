#include "atgraph/coefficient.hpp"

#include <vector>

#include "atgraph/errors.hpp"

namespace atgraph {

namespace {

struct CoeffWorker {
  int edge_count;
  std::span<const Edge> edges;
  std::span<const int> target;
  std::vector<int> count;     // picks so far per vertex
  std::vector<int> remaining; // undecided incident edges per vertex
  std::int64_t total = 0;

  std::vector<int> initial_remaining;

  CoeffWorker(const Graph& g, std::span<const int> targets)
      : edge_count(g.size()), edges(g.edges()), target(targets) {
    count.assign(static_cast<size_t>(g.order()), 0);
    remaining.assign(static_cast<size_t>(g.order()), 0);
    for (const Edge& e : edges) {
      remaining[e.u]++;
      remaining[e.v]++;
    }
    initial_remaining = remaining;
  }

  // Restores the decision state; keeps the accumulated total.
  void reset() {
    std::fill(count.begin(), count.end(), 0);
    remaining = initial_remaining;
  }

  bool reachable(const Edge& e) const {
    return count[e.u] + remaining[e.u] >= target[e.u] &&
           count[e.v] + remaining[e.v] >= target[e.v];
  }

  void search(int i, int sign) {
    if (i == edge_count) {
      total += sign;
      return;
    }
    const Edge& e = edges[i];
    remaining[e.u]--;
    remaining[e.v]--;
    if (count[e.u] < target[e.u]) {
      count[e.u]++;
      if (reachable(e)) search(i + 1, sign);
      count[e.u]--;
    }
    if (count[e.v] < target[e.v]) {
      count[e.v]++;
      if (reachable(e)) search(i + 1, -sign);
      count[e.v]--;
    }
    remaining[e.u]++;
    remaining[e.v]++;
  }

  // Mask bit i: 0 picks the smaller endpoint of edge i, 1 the larger.
  bool replay_prefix(unsigned long mask, int depth, int* sign) {
    *sign = 1;
    for (int i = 0; i < depth; i++) {
      const Edge& e = edges[i];
      remaining[e.u]--;
      remaining[e.v]--;
      int picked = mask >> i & 1u ? e.v : e.u;
      if (count[picked] >= target[picked]) return false;
      count[picked]++;
      if (picked == e.v) *sign = -*sign;
      if (!reachable(e)) return false;
    }
    return true;
  }
};

void check_targets(const Graph& g, std::span<const int> targets) {
  if (static_cast<int>(targets.size()) != g.order())
    throw Error("target mismatch: " + std::to_string(targets.size()) +
                " targets for " + std::to_string(g.order()) + " vertices");
  std::int64_t sum = 0;
  for (int t : targets) {
    if (t < 0) throw Error("target mismatch: negative exponent");
    sum += t;
  }
  if (sum != g.size())
    throw Error("target mismatch: exponents sum to " + std::to_string(sum) +
                ", edge count is " + std::to_string(g.size()));
}

bool degree_bound_fails(const Graph& g, std::span<const int> targets) {
  for (int v = 0; v < g.order(); v++)
    if (g.degree(v) < targets[v]) return true;
  return false;
}

}  // namespace

std::int64_t monomial_coefficient_serial(const Graph& g,
                                         std::span<const int> targets) {
  check_targets(g, targets);
  if (degree_bound_fails(g, targets)) return 0;
  CoeffWorker worker(g, targets);
  worker.search(0, 1);
  return worker.total;
}

std::int64_t monomial_coefficient(const Graph& g, std::span<const int> targets,
                                  const CoeffOptions& opts) {
  check_targets(g, targets);
  if (degree_bound_fails(g, targets)) return 0;
  int m = g.size();
  int depth = std::min(opts.split_depth, m);
#if defined(_OPENMP)
  if (depth >= 4 && m > depth) {
    std::int64_t total = 0;
    const long long prefixes = 1ll << depth;
#pragma omp parallel reduction(+ : total)
    {
      CoeffWorker worker(g, targets);
#pragma omp for schedule(dynamic, 16)
      for (long long mask = 0; mask < prefixes; mask++) {
        worker.reset();
        int sign = 1;
        if (worker.replay_prefix(static_cast<unsigned long>(mask), depth,
                                 &sign))
          worker.search(depth, sign);
      }
      total = worker.total;
    }
    return total;
  }
#endif
  CoeffWorker worker(g, targets);
  worker.search(0, 1);
  return worker.total;
}

}  // namespace atgraph
