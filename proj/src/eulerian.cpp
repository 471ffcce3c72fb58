#include "atgraph/eulerian.hpp"

#include <cstdlib>
#include <numeric>
#include <vector>

#include "atgraph/errors.hpp"

namespace atgraph {

namespace {

struct DiffWorker {
  int arc_count = 0;
  std::vector<Arc> arcs;
  std::vector<int> balance;   // chosen out-arcs minus chosen in-arcs
  std::vector<int> remaining; // undecided incident arcs per vertex
  std::vector<int> initial_remaining;
  std::int64_t even = 0;
  std::int64_t odd = 0;

  DiffWorker(const Orientation& d, std::span<const int> order) {
    arc_count = static_cast<int>(d.arcs.size());
    arcs.reserve(d.arcs.size());
    for (int i : order) arcs.push_back(d.arcs[i]);
    balance.assign(static_cast<size_t>(d.base.order()), 0);
    remaining.assign(static_cast<size_t>(d.base.order()), 0);
    for (const Arc& a : arcs) {
      remaining[a.tail]++;
      remaining[a.head]++;
    }
    initial_remaining = remaining;
  }

  // Restores the decision state; keeps the accumulated counts.
  void reset() {
    std::fill(balance.begin(), balance.end(), 0);
    remaining = initial_remaining;
  }

  bool endpoints_feasible(const Arc& a) const {
    return std::abs(balance[a.tail]) <= remaining[a.tail] &&
           std::abs(balance[a.head]) <= remaining[a.head];
  }

  void search(int i, int chosen) {
    if (i == arc_count) {
      (chosen % 2 == 0 ? even : odd)++;
      return;
    }
    const Arc& a = arcs[i];
    remaining[a.tail]--;
    remaining[a.head]--;
    if (endpoints_feasible(a)) search(i + 1, chosen);
    balance[a.tail]++;
    balance[a.head]--;
    if (endpoints_feasible(a)) search(i + 1, chosen + 1);
    balance[a.tail]--;
    balance[a.head]++;
    remaining[a.tail]++;
    remaining[a.head]++;
  }

  // Applies the first `depth` include/exclude decisions from the mask bits;
  // returns false when that prefix is already infeasible.
  bool replay_prefix(unsigned long mask, int depth, int* chosen) {
    *chosen = 0;
    for (int i = 0; i < depth; i++) {
      const Arc& a = arcs[i];
      remaining[a.tail]--;
      remaining[a.head]--;
      if (mask >> i & 1u) {
        balance[a.tail]++;
        balance[a.head]--;
        (*chosen)++;
      }
      if (!endpoints_feasible(a)) return false;
    }
    return true;
  }
};

std::vector<int> identity_order(size_t m) {
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  return order;
}

void check_limit(const Orientation& d, const DiffOptions& opts) {
  if (static_cast<int>(d.arcs.size()) > opts.max_edges)
    throw Error("too many edges for Eulerian enumeration: " +
                std::to_string(d.arcs.size()) + " > " +
                std::to_string(opts.max_edges));
}

}  // namespace

DiffResult eulerian_diff_serial_ordered(const Orientation& d,
                                        std::span<const int> arc_order,
                                        const DiffOptions& opts) {
  check_limit(d, opts);
  DiffWorker worker(d, arc_order);
  worker.search(0, 0);
  return {worker.even, worker.odd};
}

DiffResult eulerian_diff_serial(const Orientation& d, const DiffOptions& opts) {
  return eulerian_diff_serial_ordered(d, identity_order(d.arcs.size()), opts);
}

DiffResult eulerian_diff(const Orientation& d, const DiffOptions& opts) {
  check_limit(d, opts);
  int m = static_cast<int>(d.arcs.size());
  int depth = std::min(opts.split_depth, m);
#if defined(_OPENMP)
  if (depth >= 4 && m > depth) {
    auto order = identity_order(d.arcs.size());
    std::int64_t even = 0, odd = 0;
    const long long prefixes = 1ll << depth;
#pragma omp parallel reduction(+ : even, odd)
    {
      DiffWorker worker(d, order);
#pragma omp for schedule(dynamic, 16)
      for (long long mask = 0; mask < prefixes; mask++) {
        worker.reset();
        int chosen = 0;
        if (worker.replay_prefix(static_cast<unsigned long>(mask), depth,
                                 &chosen))
          worker.search(depth, chosen);
      }
      even = worker.even;
      odd = worker.odd;
    }
    return {even, odd};
  }
#endif
  return eulerian_diff_serial(d, opts);
}

}  // namespace atgraph
