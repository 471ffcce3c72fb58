#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "atgraph/graph.hpp"

namespace atgraph {

struct DegeneracyInfo {
  int degeneracy = 0;
  // Peel order: replaying it, each vertex has at most `degeneracy` neighbors
  // remaining at deletion time. Reverse it to build the acyclic orientation
  // with maximum outdegree `degeneracy`.
  std::vector<int> elimination_order;
  int coloring_number = 1;  // degeneracy + 1
};

// Bucket min-degree peel; exact.
DegeneracyInfo degeneracy(const Graph& g);

// Repeatedly removes vertices of degree <= 1 until the minimum degree is at
// least 2 or a single vertex remains. The result is re-indexed; labels carry
// over. When given, `kept` receives the old index of each surviving vertex.
Graph core_of(const Graph& g, std::vector<int>* kept = nullptr);

struct CoreClass {
  enum class Kind { K1, EvenCycle, OddCycle, Theta222m, Other };
  Kind kind = Kind::Other;
  int length = 0;  // cycle length for the cycle kinds
  int m = 0;       // theta(2,2,2m) parameter

  friend bool operator==(const CoreClass&, const CoreClass&) = default;
};

std::string to_string(const CoreClass& c);

// Classifies the given graph (normally a core) as K1, a cycle by parity, a
// theta(2,2,even) graph, or Other.
CoreClass classify_core(const Graph& g);

// Requires a connected graph with at least one edge.
bool at_equals_two(const Graph& g);

// Requires a connected graph.
bool two_choosable(const Graph& g);

struct ChromaticOptions {
  int max_vertices = 64;
  int max_colors = 6;
};

// Exact chromatic number by saturation-guided branch and bound, deepening on
// the number of colors.
int chromatic_number(const Graph& g, const ChromaticOptions& opts = {});

// Maximum of |E(H)|/|V(H)| over nonempty subgraphs, as the exact (unreduced)
// ratio of a witness subgraph.
struct Density {
  std::int64_t edges = 0;     // |E(H*)|
  std::int64_t vertices = 1;  // |V(H*)|
  std::vector<int> witness;   // vertices of H*, sorted

  std::int64_t ceil_ratio() const {
    return (edges + vertices - 1) / vertices;
  }
  std::string to_string() const {
    return std::to_string(edges) + "/" + std::to_string(vertices);
  }
};

// Exact maximum density via repeated max-flow feasibility probes at
// candidate ratios p/q (q <= |V|), improving the witness until no denser
// subgraph exists.
Density max_density(const Graph& g);

struct StructureReport {
  int degeneracy = 0;
  std::vector<int> elimination_order;
  int coloring_number = 1;
  Graph core;
  CoreClass core_class;
  std::optional<int> chromatic;
};

StructureReport structure_report(const Graph& g, bool with_chromatic = false);

}  // namespace atgraph
