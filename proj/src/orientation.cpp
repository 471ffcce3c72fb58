#include "atgraph/orientation.hpp"

#include <algorithm>

#include "atgraph/errors.hpp"

namespace atgraph {

int Orientation::max_outdeg() const {
  return outdeg.empty() ? 0 : *std::max_element(outdeg.begin(), outdeg.end());
}

namespace {

Orientation finish(Graph base, std::vector<Arc> arcs) {
  Orientation d;
  d.outdeg.assign(static_cast<size_t>(base.order()), 0);
  d.indeg.assign(static_cast<size_t>(base.order()), 0);
  for (const Arc& a : arcs) {
    d.outdeg[a.tail]++;
    d.indeg[a.head]++;
  }
  d.base = std::move(base);
  d.arcs = std::move(arcs);
  return d;
}

}  // namespace

Orientation make_orientation(Graph base, std::span<const Arc> arcs) {
  if (static_cast<int>(arcs.size()) != base.size())
    throw Error("edge set mismatch: " + std::to_string(arcs.size()) +
                " arcs for " + std::to_string(base.size()) + " edges");
  std::vector<Arc> aligned(static_cast<size_t>(base.size()));
  std::vector<char> used(static_cast<size_t>(base.size()), 0);
  for (const Arc& a : arcs) {
    if (a.tail < 0 || a.head < 0 || a.tail >= base.order() ||
        a.head >= base.order() || a.tail == a.head)
      throw Error("edge set mismatch: invalid arc (" +
                  std::to_string(a.tail) + ", " + std::to_string(a.head) + ")");
    int idx = base.edge_index(a.tail, a.head);
    if (idx < 0 || used[idx])
      throw Error("edge set mismatch: arc (" + std::to_string(a.tail) + ", " +
                  std::to_string(a.head) + ") does not orient a distinct edge");
    used[idx] = 1;
    aligned[idx] = a;
  }
  return finish(std::move(base), std::move(aligned));
}

Orientation orient_by_order(const Graph& g, std::span<const int> order) {
  int n = g.order();
  std::vector<int> position(static_cast<size_t>(n), -1);
  if (static_cast<int>(order.size()) != n)
    throw Error("not a permutation of the vertices");
  for (int i = 0; i < n; i++) {
    int v = order[i];
    if (v < 0 || v >= n || position[v] >= 0)
      throw Error("not a permutation of the vertices");
    position[v] = i;
  }
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<size_t>(g.size()));
  for (const Edge& e : g.edges()) {
    if (position[e.u] < position[e.v])
      arcs.push_back({e.v, e.u});
    else
      arcs.push_back({e.u, e.v});
  }
  return finish(g, std::move(arcs));
}

Orientation reverse(const Orientation& d) {
  std::vector<Arc> arcs;
  arcs.reserve(d.arcs.size());
  for (const Arc& a : d.arcs) arcs.push_back({a.head, a.tail});
  return finish(d.base, std::move(arcs));
}

}  // namespace atgraph
