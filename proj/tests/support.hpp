#pragma once

// Shared test helpers: seeded graph corpora and brute-force oracles. The
// oracles enumerate exhaustively and never touch the library's search or
// pruning paths.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "atgraph/graph.hpp"
#include "atgraph/orientation.hpp"

namespace testsupport {

using atgraph::Arc;
using atgraph::Edge;
using atgraph::Graph;
using atgraph::Orientation;

inline std::uint32_t below(std::mt19937_64& rng, std::uint32_t bound) {
  return static_cast<std::uint32_t>(rng() % bound);
}

template <typename T>
void shuffle_vec(std::mt19937_64& rng, std::vector<T>& values) {
  for (size_t i = values.size(); i > 1; i--)
    std::swap(values[i - 1], values[below(rng, static_cast<std::uint32_t>(i))]);
}

inline Graph random_graph(std::mt19937_64& rng, int n, int percent) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; u++)
    for (int v = u + 1; v < n; v++)
      if (below(rng, 100) < static_cast<std::uint32_t>(percent))
        edges.push_back({u, v});
  return Graph::build(n, std::move(edges));
}

inline Graph random_connected_graph(std::mt19937_64& rng, int n,
                                    int extra_percent) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; v++) {
    int u = static_cast<int>(below(rng, static_cast<std::uint32_t>(v)));
    edges.push_back({u, v});
  }
  for (int u = 0; u < n; u++)
    for (int v = u + 1; v < n; v++) {
      Edge e{u, v};
      if (std::find(edges.begin(), edges.end(), e) == edges.end() &&
          below(rng, 100) < static_cast<std::uint32_t>(extra_percent))
        edges.push_back(e);
    }
  return Graph::build(n, std::move(edges));
}

inline Orientation random_orientation(std::mt19937_64& rng, const Graph& g) {
  std::vector<Arc> arcs;
  for (const Edge& e : g.edges()) {
    if (below(rng, 2))
      arcs.push_back({e.u, e.v});
    else
      arcs.push_back({e.v, e.u});
  }
  return atgraph::make_orientation(g, arcs);
}

// All 2^n two-colorings.
inline bool oracle_bipartite(const Graph& g) {
  int n = g.order();
  for (std::uint32_t mask = 0; mask < (1u << n); mask++) {
    bool proper = true;
    for (const Edge& e : g.edges())
      proper &= ((mask >> e.u) & 1u) != ((mask >> e.v) & 1u);
    if (proper) return true;
  }
  return g.order() == 0;
}

// Max over induced vertex subsets of the minimum degree.
inline int oracle_degeneracy(const Graph& g) {
  int n = g.order();
  int best = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); mask++) {
    int min_deg = n;
    for (int v = 0; v < n; v++) {
      if (!((mask >> v) & 1u)) continue;
      int deg = 0;
      for (int w : g.neighbors(v)) deg += (mask >> w) & 1u;
      min_deg = std::min(min_deg, deg);
    }
    best = std::max(best, min_deg);
  }
  return best;
}

// Even/odd counts over all 2^m arc subsets.
inline std::pair<std::int64_t, std::int64_t> oracle_eulerian_counts(
    const Orientation& d) {
  int m = static_cast<int>(d.arcs.size());
  std::int64_t even = 0, odd = 0;
  std::vector<int> balance(static_cast<size_t>(d.base.order()));
  for (std::uint32_t mask = 0; mask < (1u << m); mask++) {
    std::fill(balance.begin(), balance.end(), 0);
    int chosen = 0;
    for (int i = 0; i < m; i++) {
      if (!((mask >> i) & 1u)) continue;
      balance[d.arcs[i].tail]++;
      balance[d.arcs[i].head]--;
      chosen++;
    }
    if (std::all_of(balance.begin(), balance.end(),
                    [](int b) { return b == 0; }))
      (chosen % 2 == 0 ? even : odd)++;
  }
  return {even, odd};
}

// Expands the product edge by edge over all 2^m endpoint picks.
inline std::int64_t oracle_coefficient(const Graph& g,
                                       const std::vector<int>& targets) {
  int m = g.size();
  std::int64_t total = 0;
  std::vector<int> counts(static_cast<size_t>(g.order()));
  for (std::uint32_t mask = 0; mask < (1u << m); mask++) {
    std::fill(counts.begin(), counts.end(), 0);
    int sign = 1;
    for (int i = 0; i < m; i++) {
      const Edge& e = g.edges()[i];
      if ((mask >> i) & 1u) {
        counts[e.v]++;
        sign = -sign;
      } else {
        counts[e.u]++;
      }
    }
    bool hit = true;
    for (int v = 0; v < g.order(); v++) hit &= counts[v] == targets[v];
    if (hit) total += sign;
  }
  return total;
}

// Max |E(H)|/|V(H)| over induced subgraphs as an (edges, vertices) pair.
inline std::pair<std::int64_t, std::int64_t> oracle_max_density(const Graph& g) {
  int n = g.order();
  std::int64_t best_p = 0, best_q = 1;
  for (std::uint32_t mask = 1; mask < (1u << n); mask++) {
    std::int64_t p = 0;
    for (const Edge& e : g.edges())
      p += ((mask >> e.u) & 1u) && ((mask >> e.v) & 1u);
    std::int64_t q = std::popcount(mask);
    if (p * best_q > best_p * q) {
      best_p = p;
      best_q = q;
    }
  }
  return {best_p, best_q};
}

// Minimum k admitting a proper coloring, by direct enumeration.
inline int oracle_chromatic(const Graph& g) {
  int n = g.order();
  if (n == 0) return 0;
  if (g.size() == 0) return 1;
  for (int k = 2; k <= n; k++) {
    std::vector<int> color(static_cast<size_t>(n), 0);
    while (true) {
      bool proper = true;
      for (const Edge& e : g.edges()) proper &= color[e.u] != color[e.v];
      if (proper) return k;
      int pos = 0;
      while (pos < n && ++color[pos] == k) color[pos++] = 0;
      if (pos == n) break;
    }
  }
  return n;
}

// Smallest k with an orientation of max outdegree k-1 whose even and odd
// Eulerian counts differ; all 2^m orientations scanned.
inline int oracle_at(const Graph& g) {
  int m = g.size();
  if (m == 0) return 1;
  for (int k = 2;; k++) {
    for (std::uint32_t mask = 0; mask < (1u << m); mask++) {
      std::vector<Arc> arcs;
      std::vector<int> outdeg(static_cast<size_t>(g.order()), 0);
      bool ok = true;
      for (int i = 0; i < m && ok; i++) {
        const Edge& e = g.edges()[i];
        Arc a = ((mask >> i) & 1u) ? Arc{e.v, e.u} : Arc{e.u, e.v};
        arcs.push_back(a);
        ok = ++outdeg[a.tail] <= k - 1;
      }
      if (!ok) continue;
      auto d = atgraph::make_orientation(g, arcs);
      auto [even, odd] = oracle_eulerian_counts(d);
      if (even != odd) return k;
    }
  }
}

}  // namespace testsupport
