#include "atgraph/structure.hpp"

#include <algorithm>
#include <numeric>

#include "atgraph/errors.hpp"
#include "maxflow.hpp"

namespace atgraph {

DegeneracyInfo degeneracy(const Graph& g) {
  DegeneracyInfo info;
  int n = g.order();
  if (n == 0) return info;

  // Matula-Beck bucket peel: vertices sorted by current degree, smallest
  // degree removed first.
  std::vector<int> deg(static_cast<size_t>(n));
  int max_deg = 0;
  for (int v = 0; v < n; v++) {
    deg[v] = g.degree(v);
    max_deg = std::max(max_deg, deg[v]);
  }
  std::vector<int> bin(static_cast<size_t>(max_deg) + 2, 0);
  for (int v = 0; v < n; v++) bin[deg[v] + 1]++;
  std::partial_sum(bin.begin(), bin.end(), bin.begin());
  std::vector<int> order(static_cast<size_t>(n));  // sorted by degree
  std::vector<int> pos(static_cast<size_t>(n));
  {
    std::vector<int> fill(bin.begin(), bin.end() - 1);
    for (int v = 0; v < n; v++) {
      pos[v] = fill[deg[v]]++;
      order[pos[v]] = v;
    }
  }

  std::vector<char> removed(static_cast<size_t>(n), 0);
  int d = 0;
  info.elimination_order.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; i++) {
    int v = order[i];
    d = std::max(d, deg[v]);
    removed[v] = 1;
    info.elimination_order.push_back(v);
    for (int w : g.neighbors(v)) {
      if (removed[w] || deg[w] <= deg[v]) continue;
      // Swap w to the front of its bucket, then shift it one bucket down.
      int dw = deg[w];
      int first_pos = bin[dw];
      int u = order[first_pos];
      std::swap(order[pos[w]], order[first_pos]);
      std::swap(pos[w], pos[u]);
      bin[dw]++;
      deg[w]--;
    }
  }
  info.degeneracy = d;
  info.coloring_number = d + 1;
  return info;
}

Graph core_of(const Graph& g, std::vector<int>* kept) {
  int n = g.order();
  std::vector<int> deg(static_cast<size_t>(n));
  std::vector<char> removed(static_cast<size_t>(n), 0);
  for (int v = 0; v < n; v++) deg[v] = g.degree(v);
  std::vector<int> queue;
  for (int v = 0; v < n; v++)
    if (deg[v] <= 1) queue.push_back(v);
  int remaining = n;
  for (size_t head = 0; head < queue.size(); head++) {
    int v = queue[head];
    if (removed[v]) continue;
    if (remaining == 1) break;
    removed[v] = 1;
    remaining--;
    for (int w : g.neighbors(v)) {
      if (removed[w]) continue;
      if (--deg[w] == 1) queue.push_back(w);
    }
  }

  std::vector<int> new_id(static_cast<size_t>(n), -1);
  std::vector<int> survivors;
  std::vector<VertexLabel> labels;
  for (int v = 0; v < n; v++) {
    if (removed[v]) continue;
    new_id[v] = static_cast<int>(survivors.size());
    survivors.push_back(v);
    labels.push_back(g.label(v));
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (!removed[e.u] && !removed[e.v])
      edges.push_back({new_id[e.u], new_id[e.v]});
  if (kept) *kept = survivors;
  return Graph::build(static_cast<int>(survivors.size()), std::move(edges),
                      std::move(labels));
}

std::string to_string(const CoreClass& c) {
  switch (c.kind) {
    case CoreClass::Kind::K1:
      return "K1";
    case CoreClass::Kind::EvenCycle:
      return "even-cycle(" + std::to_string(c.length) + ")";
    case CoreClass::Kind::OddCycle:
      return "odd-cycle(" + std::to_string(c.length) + ")";
    case CoreClass::Kind::Theta222m:
      return "theta(2,2," + std::to_string(2 * c.m) + ")";
    case CoreClass::Kind::Other:
      return "other";
  }
  return "other";
}

CoreClass classify_core(const Graph& g) {
  int n = g.order();
  int m = g.size();
  if (n == 1 && m == 0) return {CoreClass::Kind::K1};
  if (n >= 3 && m == n && is_connected(g)) {
    bool all_two = true;
    for (int v = 0; v < n; v++) all_two &= g.degree(v) == 2;
    if (all_two)
      return {n % 2 == 0 ? CoreClass::Kind::EvenCycle : CoreClass::Kind::OddCycle,
              n, 0};
  }

  // theta(2,2,c): two degree-3 hubs joined by three internally disjoint
  // paths with sorted lengths (2, 2, c), c even.
  std::vector<int> hubs;
  bool degrees_fit = true;
  for (int v = 0; v < n; v++) {
    if (g.degree(v) == 3)
      hubs.push_back(v);
    else if (g.degree(v) != 2)
      degrees_fit = false;
  }
  if (degrees_fit && hubs.size() == 2 && is_connected(g)) {
    int u = hubs[0], target = hubs[1];
    std::vector<int> lengths;
    int internal = 0;
    bool ok = true;
    for (int start : g.neighbors(u)) {
      int prev = u, cur = start, len = 1;
      while (cur != target && cur != u && g.degree(cur) == 2) {
        int next = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1]
                                               : g.neighbors(cur)[0];
        prev = cur;
        cur = next;
        len++;
      }
      if (cur != target) {
        ok = false;
        break;
      }
      lengths.push_back(len);
      internal += len - 1;
    }
    if (ok && lengths.size() == 3 && internal + 2 == n) {
      std::sort(lengths.begin(), lengths.end());
      if (lengths[0] == 2 && lengths[1] == 2 && lengths[2] % 2 == 0)
        return {CoreClass::Kind::Theta222m, 0, lengths[2] / 2};
    }
  }
  return {CoreClass::Kind::Other};
}

bool at_equals_two(const Graph& g) {
  if (g.size() == 0) throw Error("graph has no edges");
  if (!is_connected(g)) throw Error("graph is not connected");
  CoreClass c = classify_core(core_of(g));
  bool result = c.kind == CoreClass::Kind::K1 ||
                c.kind == CoreClass::Kind::EvenCycle;
  // With no odd cycle present the edge-count criterion must agree.
  if (is_bipartite(g).ok() && result != (g.size() <= g.order()))
    throw Error("internal: core classification disagrees with edge count");
  return result;
}

bool two_choosable(const Graph& g) {
  if (!is_connected(g)) throw Error("graph is not connected");
  CoreClass c = classify_core(core_of(g));
  return c.kind == CoreClass::Kind::K1 ||
         c.kind == CoreClass::Kind::EvenCycle ||
         c.kind == CoreClass::Kind::Theta222m;
}

namespace {

struct ColoringSearch {
  const Graph& g;
  int colors;
  std::vector<int> color;

  explicit ColoringSearch(const Graph& graph, int k)
      : g(graph), colors(k), color(static_cast<size_t>(graph.order()), -1) {}

  bool feasible(int assigned, int used) {
    if (assigned == g.order()) return true;
    // Saturation-first branching, degree as tiebreak.
    int best = -1, best_sat = -1, best_deg = -1;
    for (int v = 0; v < g.order(); v++) {
      if (color[v] >= 0) continue;
      int sat = saturation(v);
      int deg = g.degree(v);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    // Allow at most one previously unused color.
    int limit = std::min(colors, used + 1);
    for (int c = 0; c < limit; c++) {
      bool clash = false;
      for (int w : g.neighbors(best)) clash |= color[w] == c;
      if (clash) continue;
      color[best] = c;
      if (feasible(assigned + 1, std::max(used, c + 1))) return true;
      color[best] = -1;
    }
    return false;
  }

  int saturation(int v) const {
    unsigned long long seen = 0;
    int count = 0;
    for (int w : g.neighbors(v)) {
      if (color[w] < 0) continue;
      unsigned long long bit = 1ull << color[w];
      if (!(seen & bit)) {
        seen |= bit;
        count++;
      }
    }
    return count;
  }
};

}  // namespace

int chromatic_number(const Graph& g, const ChromaticOptions& opts) {
  if (g.order() > opts.max_vertices)
    throw Error("graph too large for exact coloring (order " +
                std::to_string(g.order()) + " > " +
                std::to_string(opts.max_vertices) + ")");
  if (g.order() == 0) return 0;
  if (g.size() == 0) return 1;
  if (is_bipartite(g).ok()) return 2;
  // Saturation sets are tracked in a 64-bit mask.
  for (int k = 3; k <= std::min(opts.max_colors, 64); k++) {
    ColoringSearch search(g, k);
    if (search.feasible(0, 0)) return k;
  }
  throw Error("chromatic number exceeds color limit " +
              std::to_string(opts.max_colors));
}

namespace {

std::int64_t edges_inside(const Graph& g, const std::vector<char>& in) {
  std::int64_t count = 0;
  for (const Edge& e : g.edges()) count += in[e.u] && in[e.v];
  return count;
}

// True and a witness when some subgraph has density strictly above p/q.
// Standard density network scaled by q: s->v with m*q, v->t with
// m*q + 2p - deg(v)*q, each edge as a q/q arc pair; a cut below m*n*q
// exposes a denser vertex set on the source side.
bool denser_subgraph(const Graph& g, std::int64_t p, std::int64_t q,
                     std::vector<char>* witness) {
  int n = g.order();
  std::int64_t m = g.size();
  detail::Dinic flow(n + 2);
  int s = n, t = n + 1;
  for (int v = 0; v < n; v++) {
    flow.add_edge(s, v, m * q);
    flow.add_edge(v, t, m * q + 2 * p - g.degree(v) * q);
  }
  for (const Edge& e : g.edges()) {
    flow.add_edge(e.u, e.v, q);
    flow.add_edge(e.v, e.u, q);
  }
  std::int64_t cut = flow.max_flow(s, t);
  if (cut >= m * static_cast<std::int64_t>(n) * q) return false;
  auto side = flow.min_cut_side(s);
  witness->assign(side.begin(), side.begin() + n);
  return true;
}

}  // namespace

Density max_density(const Graph& g) {
  if (g.order() == 0) throw Error("density requires at least one vertex");
  Density best;
  if (g.size() == 0) {
    best.edges = 0;
    best.vertices = 1;
    best.witness = {0};
    return best;
  }
  std::vector<char> in(static_cast<size_t>(g.order()), 1);
  best.edges = g.size();
  best.vertices = g.order();
  while (true) {
    std::vector<char> candidate;
    if (!denser_subgraph(g, best.edges, best.vertices, &candidate)) break;
    std::int64_t p = edges_inside(g, candidate);
    std::int64_t q = std::count(candidate.begin(), candidate.end(), 1);
    if (p * best.vertices <= best.edges * q)
      throw Error("internal: density probe failed to improve");
    best.edges = p;
    best.vertices = q;
    in = std::move(candidate);
  }
  best.witness.clear();
  for (int v = 0; v < g.order(); v++)
    if (in[v]) best.witness.push_back(v);
  return best;
}

StructureReport structure_report(const Graph& g, bool with_chromatic) {
  StructureReport report;
  DegeneracyInfo info = degeneracy(g);
  report.degeneracy = info.degeneracy;
  report.elimination_order = std::move(info.elimination_order);
  report.coloring_number = info.coloring_number;
  report.core = core_of(g);
  report.core_class = classify_core(report.core);
  if (with_chromatic) report.chromatic = chromatic_number(g);
  return report;
}

}  // namespace atgraph
