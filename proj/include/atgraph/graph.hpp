#pragma once

#include <compare>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace atgraph {

// Undirected edge with endpoints stored as u < v.
struct Edge {
  int u = 0;
  int v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Records where a vertex came from as graphs are transformed and combined.
// Original/EdgeVertex refer to vertices resp. edges of the immediate base
// graph; Pair tags product and sum vertices with the partner-graph vertex.
struct VertexLabel {
  enum class Kind { Plain, Original, EdgeVertex, Pair };

  Kind kind = Kind::Plain;
  int u = -1;
  int v = -1;                                // EdgeVertex only, u < v
  std::shared_ptr<const VertexLabel> inner;  // Pair only
  int layer = -1;                            // Pair only

  static VertexLabel plain() { return {}; }
  static VertexLabel original(int u);
  static VertexLabel edge_vertex(int u, int v);
  static VertexLabel pair(const VertexLabel& inner, int layer);

  bool operator==(const VertexLabel& other) const;
};

std::string to_string(const VertexLabel& label);

// Immutable simple undirected graph on vertices 0..order-1. Edges are kept
// sorted lexicographically with u < v; adjacency is derived once on build.
class Graph {
 public:
  Graph() = default;

  // Validates endpoints, normalizes each pair to u < v, sorts the edge list
  // and rejects self-loops and duplicates. Labels default to Plain.
  static Graph build(int order, std::vector<Edge> edges);
  static Graph build(int order, std::vector<Edge> edges,
                     std::vector<VertexLabel> labels);

  int order() const { return order_; }
  int size() const { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const int> neighbors(int v) const;
  int degree(int v) const;
  bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }
  // Rank of {u,v} in the sorted edge list, -1 if absent.
  int edge_index(int u, int v) const;
  const VertexLabel& label(int v) const { return labels_[v]; }
  std::span<const VertexLabel> labels() const { return labels_; }

  bool operator==(const Graph& other) const;

 private:
  int order_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexLabel> labels_;
  std::vector<int> adj_offsets_;
  std::vector<int> adjacency_;
};

// Canonical generators. Vertex numbering:
//   path(n):     0-1-...-(n-1)
//   cycle(n):    0-1-...-(n-1)-0, n >= 3
//   star(n):     center 0, leaves 1..n (n+1 vertices)
//   complete(n): all pairs
//   theta(a,b,c): hubs 0 and 1; internal vertices of the three paths are
//                 numbered consecutively, path a first; a <= b <= c and at
//                 most one length may be 1
struct GraphFamily {
  enum class Kind { Path, Cycle, Star, Complete, Theta };
  Kind kind = Kind::Path;
  int n = 0;
  int a = 0, b = 0, c = 0;  // Theta only
};

Graph generate(const GraphFamily& family);
Graph path(int n);
Graph cycle(int n);
Graph star(int leaves);
Graph complete(int n);
Graph theta(int a, int b, int c);

struct DegreeProfile {
  int min_degree = 0;
  int max_degree = 0;
  std::vector<int> sequence;  // indexed by vertex
};
DegreeProfile degree_profile(const Graph& g);

// side[v] in {0,1} per vertex when no odd cycle exists; otherwise side is
// empty and odd_cycle holds the vertices of an odd cycle in order.
struct Bipartition {
  std::vector<int> side;
  std::vector<int> odd_cycle;
  bool ok() const { return odd_cycle.empty(); }
};
Bipartition is_bipartite(const Graph& g);

bool is_connected(const Graph& g);

}  // namespace atgraph
