#include "atgraph/transforms.hpp"

#include <algorithm>

#include "atgraph/errors.hpp"

namespace atgraph {

std::optional<FKind> parse_fkind(std::string_view text) {
  if (text == "S" || text == "s") return FKind::S;
  if (text == "R" || text == "r") return FKind::R;
  if (text == "Q" || text == "q") return FKind::Q;
  if (text == "T" || text == "t") return FKind::T;
  return std::nullopt;
}

std::string_view to_string(FKind kind) {
  switch (kind) {
    case FKind::S: return "S";
    case FKind::R: return "R";
    case FKind::Q: return "Q";
    case FKind::T: return "T";
  }
  return "?";
}

namespace {

std::vector<VertexLabel> operation_labels(const Graph& g) {
  std::vector<VertexLabel> labels;
  labels.reserve(static_cast<size_t>(g.order() + g.size()));
  for (int v = 0; v < g.order(); v++) labels.push_back(VertexLabel::original(v));
  for (const Edge& e : g.edges())
    labels.push_back(VertexLabel::edge_vertex(e.u, e.v));
  return labels;
}

// Edges of S(g): every base edge {u,v} becomes {u,x} and {v,x} for its
// edge vertex x.
std::vector<Edge> subdivision_edges(const Graph& g) {
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(2 * g.size()));
  int n = g.order();
  for (int i = 0; i < g.size(); i++) {
    const Edge& e = g.edges()[i];
    edges.push_back({e.u, n + i});
    edges.push_back({e.v, n + i});
  }
  return edges;
}

// Edge-vertex pairs of base edges sharing an endpoint.
std::vector<Edge> adjacent_edge_pairs(const Graph& g) {
  int n = g.order();
  std::vector<std::vector<int>> incident(static_cast<size_t>(n));
  for (int i = 0; i < g.size(); i++) {
    incident[g.edges()[i].u].push_back(i);
    incident[g.edges()[i].v].push_back(i);
  }
  std::vector<Edge> pairs;
  for (int v = 0; v < n; v++)
    for (size_t a = 0; a < incident[v].size(); a++)
      for (size_t b = a + 1; b < incident[v].size(); b++)
        pairs.push_back({n + incident[v][a], n + incident[v][b]});
  return pairs;
}

}  // namespace

Graph subdivision(const Graph& g) {
  return Graph::build(g.order() + g.size(), subdivision_edges(g),
                      operation_labels(g));
}

Graph triangle_parallel(const Graph& g) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  auto sub = subdivision_edges(g);
  edges.insert(edges.end(), sub.begin(), sub.end());
  return Graph::build(g.order() + g.size(), std::move(edges),
                      operation_labels(g));
}

Graph line_superposition(const Graph& g) {
  auto edges = subdivision_edges(g);
  auto pairs = adjacent_edge_pairs(g);
  edges.insert(edges.end(), pairs.begin(), pairs.end());
  return Graph::build(g.order() + g.size(), std::move(edges),
                      operation_labels(g));
}

Graph total_graph(const Graph& g) {
  Graph r = triangle_parallel(g);
  Graph q = line_superposition(g);
  std::vector<Edge> edges(r.edges().begin(), r.edges().end());
  edges.insert(edges.end(), q.edges().begin(), q.edges().end());
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph::build(g.order() + g.size(), std::move(edges),
                      operation_labels(g));
}

Graph apply(FKind kind, const Graph& g) {
  switch (kind) {
    case FKind::S: return subdivision(g);
    case FKind::R: return triangle_parallel(g);
    case FKind::Q: return line_superposition(g);
    case FKind::T: return total_graph(g);
  }
  throw Error("unknown operation kind");
}

Graph cartesian(const Graph& g, const Graph& h) {
  int ng = g.order();
  int nh = h.order();
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(ng) * h.size() +
                static_cast<size_t>(nh) * g.size());
  for (int v = 0; v < nh; v++)
    for (const Edge& e : g.edges())
      edges.push_back({v * ng + e.u, v * ng + e.v});
  for (const Edge& f : h.edges())
    for (int u = 0; u < ng; u++)
      edges.push_back({f.u * ng + u, f.v * ng + u});
  std::vector<VertexLabel> labels;
  labels.reserve(static_cast<size_t>(ng) * nh);
  for (int v = 0; v < nh; v++)
    for (int u = 0; u < ng; u++)
      labels.push_back(VertexLabel::pair(g.label(u), v));
  return Graph::build(ng * nh, std::move(edges), std::move(labels));
}

FSumLayout fsum_layout(const Graph& g, const Graph& h) {
  return FSumLayout{g.order(), g.size(), h.order()};
}

std::vector<Edge> FSumLayout::deleted_edges(const Graph& h) const {
  std::vector<Edge> deleted;
  for (const Edge& f : h.edges())
    for (int x = base_order; x < layer_width(); x++)
      deleted.push_back({index(x, f.u), index(x, f.v)});
  return deleted;
}

Graph f_sum(const Graph& g, const Graph& h, FKind kind) {
  if (g.order() < 1 || h.order() < 1)
    throw Error("f-sum requires nonempty factors");
  Graph fg = apply(kind, g);
  FSumLayout layout = fsum_layout(g, h);

  // Adjacency rule: in-layer edges come from F(g); edges across layers only
  // join copies of an original vertex whose layers are adjacent in h.
  std::vector<Edge> edges;
  for (int v = 0; v < h.order(); v++)
    for (const Edge& e : fg.edges())
      edges.push_back({layout.index(e.u, v), layout.index(e.v, v)});
  for (const Edge& f : h.edges())
    for (int w = 0; w < g.order(); w++)
      edges.push_back({layout.index(w, f.u), layout.index(w, f.v)});

  std::vector<VertexLabel> labels;
  labels.reserve(static_cast<size_t>(layout.layer_width()) * h.order());
  for (int v = 0; v < h.order(); v++)
    for (int w = 0; w < layout.layer_width(); w++)
      labels.push_back(VertexLabel::pair(fg.label(w), v));
  Graph direct = Graph::build(layout.layer_width() * h.order(),
                              std::move(edges), std::move(labels));

  // Second route: product minus E*. The two must agree edge for edge.
  Graph product = cartesian(fg, h);
  auto deleted = layout.deleted_edges(h);
  std::sort(deleted.begin(), deleted.end());
  std::vector<Edge> remaining;
  std::set_difference(product.edges().begin(), product.edges().end(),
                      deleted.begin(), deleted.end(),
                      std::back_inserter(remaining));
  if (!std::ranges::equal(direct.edges(), remaining))
    throw Error("internal: f-sum adjacency rule disagrees with product minus E*");
  return direct;
}

}  // namespace atgraph
