#include "atgraph/graph.hpp"

#include <algorithm>
#include <deque>

#include "atgraph/errors.hpp"

namespace atgraph {

VertexLabel VertexLabel::original(int u) {
  VertexLabel l;
  l.kind = Kind::Original;
  l.u = u;
  return l;
}

VertexLabel VertexLabel::edge_vertex(int u, int v) {
  VertexLabel l;
  l.kind = Kind::EdgeVertex;
  l.u = std::min(u, v);
  l.v = std::max(u, v);
  return l;
}

VertexLabel VertexLabel::pair(const VertexLabel& inner, int layer) {
  VertexLabel l;
  l.kind = Kind::Pair;
  l.inner = std::make_shared<VertexLabel>(inner);
  l.layer = layer;
  return l;
}

bool VertexLabel::operator==(const VertexLabel& other) const {
  if (kind != other.kind) return false;
  switch (kind) {
    case Kind::Plain:
      return true;
    case Kind::Original:
      return u == other.u;
    case Kind::EdgeVertex:
      return u == other.u && v == other.v;
    case Kind::Pair:
      return layer == other.layer && inner && other.inner &&
             *inner == *other.inner;
  }
  return false;
}

std::string to_string(const VertexLabel& label) {
  switch (label.kind) {
    case VertexLabel::Kind::Plain:
      return "";
    case VertexLabel::Kind::Original:
      return "v" + std::to_string(label.u);
    case VertexLabel::Kind::EdgeVertex:
      return "e" + std::to_string(label.u) + "-" + std::to_string(label.v);
    case VertexLabel::Kind::Pair:
      return "(" + to_string(*label.inner) + "|" + std::to_string(label.layer) +
             ")";
  }
  return "";
}

Graph Graph::build(int order, std::vector<Edge> edges) {
  return build(order, std::move(edges),
               std::vector<VertexLabel>(static_cast<size_t>(std::max(order, 0))));
}

Graph Graph::build(int order, std::vector<Edge> edges,
                   std::vector<VertexLabel> labels) {
  if (order < 0) throw Error("order must be nonnegative");
  if (static_cast<int>(labels.size()) != order)
    throw Error("labels must have exactly one entry per vertex");
  for (auto& e : edges) {
    if (e.u == e.v)
      throw Error("self-loop: (" + std::to_string(e.u) + ", " +
                  std::to_string(e.v) + ")");
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= order)
      throw Error("endpoint out of range: (" + std::to_string(e.u) + ", " +
                  std::to_string(e.v) + ") with order " +
                  std::to_string(order));
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end())
    throw Error("duplicate edge: (" + std::to_string(dup->u) + ", " +
                std::to_string(dup->v) + ")");

  Graph g;
  g.order_ = order;
  g.edges_ = std::move(edges);
  g.labels_ = std::move(labels);

  std::vector<int> deg(static_cast<size_t>(order), 0);
  for (const auto& e : g.edges_) {
    deg[e.u]++;
    deg[e.v]++;
  }
  g.adj_offsets_.assign(static_cast<size_t>(order) + 1, 0);
  for (int v = 0; v < order; v++) g.adj_offsets_[v + 1] = g.adj_offsets_[v] + deg[v];
  g.adjacency_.resize(g.edges_.size() * 2);
  std::vector<int> fill(g.adj_offsets_.begin(), g.adj_offsets_.end() - 1);
  for (const auto& e : g.edges_) {
    g.adjacency_[fill[e.u]++] = e.v;
    g.adjacency_[fill[e.v]++] = e.u;
  }
  for (int v = 0; v < order; v++)
    std::sort(g.adjacency_.begin() + g.adj_offsets_[v],
              g.adjacency_.begin() + g.adj_offsets_[v + 1]);
  return g;
}

std::span<const int> Graph::neighbors(int v) const {
  return {adjacency_.data() + adj_offsets_[v],
          adjacency_.data() + adj_offsets_[v + 1]};
}

int Graph::degree(int v) const {
  return adj_offsets_[v + 1] - adj_offsets_[v];
}

int Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  Edge key{u, v};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || !(*it == key)) return -1;
  return static_cast<int>(it - edges_.begin());
}

bool Graph::operator==(const Graph& other) const {
  return order_ == other.order_ && edges_ == other.edges_ &&
         labels_ == other.labels_;
}

Graph path(int n) {
  if (n < 1) throw Error("invalid parameter: path needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; i++) edges.push_back({i, i + 1});
  return Graph::build(n, std::move(edges));
}

Graph cycle(int n) {
  if (n < 3) throw Error("invalid parameter: cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; i++) edges.push_back({i, i + 1});
  edges.push_back({0, n - 1});
  return Graph::build(n, std::move(edges));
}

Graph star(int leaves) {
  if (leaves < 1) throw Error("invalid parameter: star needs n >= 1 leaves");
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; i++) edges.push_back({0, i});
  return Graph::build(leaves + 1, std::move(edges));
}

Graph complete(int n) {
  if (n < 1) throw Error("invalid parameter: complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < n; u++)
    for (int v = u + 1; v < n; v++) edges.push_back({u, v});
  return Graph::build(n, std::move(edges));
}

Graph theta(int a, int b, int c) {
  if (a < 1 || b < 1 || c < 1)
    throw Error("invalid parameter: theta path lengths must be >= 1");
  if (!(a <= b && b <= c))
    throw Error("invalid parameter: theta lengths must satisfy a <= b <= c");
  if (b == 1)  // two (or three) paths of length 1 would be a multi-edge
    throw Error("invalid parameter: theta allows at most one path of length 1");
  std::vector<Edge> edges;
  int next = 2;
  for (int len : {a, b, c}) {
    int prev = 0;
    for (int j = 1; j < len; j++) {
      edges.push_back({prev, next});
      prev = next++;
    }
    edges.push_back({prev, 1});
  }
  return Graph::build(next, std::move(edges));
}

Graph generate(const GraphFamily& family) {
  switch (family.kind) {
    case GraphFamily::Kind::Path:
      return path(family.n);
    case GraphFamily::Kind::Cycle:
      return cycle(family.n);
    case GraphFamily::Kind::Star:
      return star(family.n);
    case GraphFamily::Kind::Complete:
      return complete(family.n);
    case GraphFamily::Kind::Theta:
      return theta(family.a, family.b, family.c);
  }
  throw Error("invalid parameter: unknown family");
}

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  p.sequence.reserve(static_cast<size_t>(g.order()));
  for (int v = 0; v < g.order(); v++) p.sequence.push_back(g.degree(v));
  if (!p.sequence.empty()) {
    auto [mn, mx] = std::minmax_element(p.sequence.begin(), p.sequence.end());
    p.min_degree = *mn;
    p.max_degree = *mx;
  }
  return p;
}

Bipartition is_bipartite(const Graph& g) {
  Bipartition result;
  int n = g.order();
  std::vector<int> side(static_cast<size_t>(n), -1);
  std::vector<int> parent(static_cast<size_t>(n), -1);
  std::vector<int> depth(static_cast<size_t>(n), 0);

  for (int root = 0; root < n; root++) {
    if (side[root] >= 0) continue;
    side[root] = 0;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(u)) {
        if (side[w] < 0) {
          side[w] = side[u] ^ 1;
          parent[w] = u;
          depth[w] = depth[u] + 1;
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          // Reconstruct the odd cycle through the BFS tree.
          std::vector<int> up_u{u}, up_w{w};
          int a = u, b = w;
          while (depth[a] > depth[b]) up_u.push_back(a = parent[a]);
          while (depth[b] > depth[a]) up_w.push_back(b = parent[b]);
          while (a != b) {
            up_u.push_back(a = parent[a]);
            up_w.push_back(b = parent[b]);
          }
          // up_u ends at the meeting vertex; splice the two walks together.
          result.odd_cycle.assign(up_u.begin(), up_u.end());
          for (auto it = up_w.rbegin() + 1; it != up_w.rend(); ++it)
            result.odd_cycle.push_back(*it);
          std::reverse(result.odd_cycle.begin(), result.odd_cycle.end());
          return result;
        }
      }
    }
  }
  result.side = std::move(side);
  return result;
}

bool is_connected(const Graph& g) {
  int n = g.order();
  if (n <= 1) return true;
  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int count = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = 1;
        count++;
        queue.push_back(w);
      }
    }
  }
  return count == n;
}

}  // namespace atgraph
