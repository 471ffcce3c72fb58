#pragma once

#include <optional>
#include <string_view>

#include "atgraph/graph.hpp"

namespace atgraph {

enum class FKind { S, R, Q, T };

std::optional<FKind> parse_fkind(std::string_view text);
std::string_view to_string(FKind kind);

// The four operation graphs. All place the base vertices first (labels
// Original) and one vertex per base edge after them, in sorted edge order
// (labels EdgeVertex).
Graph subdivision(const Graph& g);         // S: edge -> path of length 2
Graph triangle_parallel(const Graph& g);   // R: edge vertex joined to both ends
Graph line_superposition(const Graph& g);  // Q: S plus edges between vertices
                                           //    of adjacent base edges
Graph total_graph(const Graph& g);         // T: edge union of R and Q
Graph apply(FKind kind, const Graph& g);

// Cartesian product. Vertex (u, v) of g x h sits at index v*|V(g)| + u and
// carries label Pair(label_g(u), v).
Graph cartesian(const Graph& g, const Graph& h);

// Vertex layout shared by all four F-sums: layers indexed by the partner
// graph h, each layer a copy of V(F(g)) = V(g) + edge vertices, so
// (w, v) -> v*(|V(g)| + |E(g)|) + w.
struct FSumLayout {
  int base_order = 0;     // |V(g)|
  int base_size = 0;      // |E(g)|, edge vertices per layer
  int partner_order = 0;  // |V(h)|

  int layer_width() const { return base_order + base_size; }
  int index(int fg_vertex, int h_vertex) const {
    return h_vertex * layer_width() + fg_vertex;
  }
  // E*: the product edges between edge-vertex copies across adjacent layers.
  std::vector<Edge> deleted_edges(const Graph& h) const;
};

FSumLayout fsum_layout(const Graph& g, const Graph& h);

// F-sum of g and h: built from the adjacency rule (vertical edges only at
// original vertices, in-layer edges from F(g)) and cross-checked against
// cartesian(F(g), h) minus E*.
Graph f_sum(const Graph& g, const Graph& h, FKind kind);

}  // namespace atgraph
