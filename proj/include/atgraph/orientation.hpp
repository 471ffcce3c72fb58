#pragma once

#include <span>
#include <vector>

#include "atgraph/graph.hpp"

namespace atgraph {

struct Arc {
  int tail = 0;
  int head = 0;
  friend bool operator==(const Arc&, const Arc&) = default;
};

// A direction for every edge of a base graph. arcs[i] orients edges()[i].
struct Orientation {
  Graph base;
  std::vector<Arc> arcs;
  std::vector<int> outdeg;
  std::vector<int> indeg;

  int max_outdeg() const;
};

// Arcs must orient the base edge set exactly (one arc per edge); they may
// arrive in any order.
Orientation make_orientation(Graph base, std::span<const Arc> arcs);

// Directs each edge from the vertex later in `order` to the earlier one,
// which is acyclic; a degeneracy peel order reversed gives maximum outdegree
// equal to the degeneracy.
Orientation orient_by_order(const Graph& g, std::span<const int> order);

Orientation reverse(const Orientation& d);

}  // namespace atgraph
