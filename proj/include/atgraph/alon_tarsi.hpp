#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "atgraph/eulerian.hpp"
#include "atgraph/graph.hpp"
#include "atgraph/orientation.hpp"

namespace atgraph {

// A claimed upper bound AT(G) <= k, carried by an orientation with maximum
// outdegree k-1 and a nonzero Eulerian difference. Independently
// re-verifiable: the digest pins the graph, and the difference can be
// recomputed from the arcs.
struct Certificate {
  std::string graph_sha;  // digest of the canonical structural JSON form
  int k = 0;
  std::vector<Arc> arcs;
  std::int64_t diff = 0;
  std::string method;  // degeneracy-order | search | s-sum-construction |
                       // subdivision-construction
  bool verified = true;  // diff recomputed by enumeration
};

// Acyclic orientation from the reversed degeneracy peel order:
// k = degeneracy + 1, diff = 1.
Certificate at_upper_bound(const Graph& g);

// max(ceil(max density) + 1, chromatic number). Any orientation with
// outdegree at most k-1 restricted to a subgraph H forces
// |E(H)| <= (k-1)|V(H)|, so the density term is a lower bound for every
// graph; the chromatic term applies when the exact coloring search is
// feasible and is skipped otherwise.
int at_lower_bound(const Graph& g);

// Exact AT for bipartite graphs: ceil(max density) + 1. Every orientation
// of a bipartite graph has nonzero difference, so the density bound is
// attained. Throws when the graph has an odd cycle.
int bipartite_at(const Graph& g);

struct SearchOptions {
  std::int64_t budget = 50'000'000;  // node expansions, search plus diffs
  DiffOptions diff;
};

struct AtExact {
  int k = 0;
  Certificate certificate;
};

// Exact AT by iterating k upward from the lower bound: for each k,
// orientations with outdegree at most k-1 are enumerated edge by edge in
// lexicographic rank order with outdegree-budget pruning, and the first one
// with nonzero Eulerian difference wins. Throws BudgetExceeded with the
// bracket [k_reached, degeneracy+1] when the node budget runs out.
AtExact at_exact(const Graph& g, const SearchOptions& opts = {});

// Certificate for S(g): every edge vertex points at its two endpoints,
// originals have outdegree 0. Acyclic, so diff = 1; k = 3.
Certificate subdivision_orientation(const Graph& g);

struct SSumOptions {
  int verify_max_edges = 25;  // beyond this, emit verified=false
  DiffOptions diff;
};

// Certificate for g +_S h from an AT-orientation d_h of h: each copy of h
// carries d_h, and every subdivision vertex points at its two neighbors
// within its layer. k = max(3, max_outdeg(d_h) + 1). The difference equals
// diff(d_h)^{|V(g)|} because subdivision arcs cannot occur in an Eulerian
// subdigraph; it is recomputed by enumeration when the edge count allows,
// otherwise recorded with verified=false.
Certificate s_sum_orientation(const Graph& g, const Graph& h,
                              const Orientation& d_h,
                              const SSumOptions& opts = {});

// True iff the digest matches the graph, the arcs respect the outdegree
// budget k-1, and the recomputed difference is nonzero and equals the
// recorded one. Throws when the arcs do not orient E(G) exactly. When
// `reason` is given it receives a short failure code.
bool verify_certificate(const Graph& g, const Certificate& c,
                        std::string* reason = nullptr,
                        const DiffOptions& opts = {});

}  // namespace atgraph
