#pragma once

// Dinic max-flow on small integer networks; used by the density probes.

#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

namespace atgraph::detail {

class Dinic {
 public:
  explicit Dinic(int n) : first_(static_cast<size_t>(n), -1), level_(n), it_(n) {}

  void add_edge(int from, int to, std::int64_t cap) {
    arcs_.push_back({to, first_[from], cap});
    first_[from] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, first_[to], 0});
    first_[to] = static_cast<int>(arcs_.size()) - 1;
  }

  std::int64_t max_flow(int s, int t) {
    std::int64_t flow = 0;
    while (bfs(s, t)) {
      it_ = first_;
      while (std::int64_t pushed =
                 dfs(s, t, std::numeric_limits<std::int64_t>::max()))
        flow += pushed;
    }
    return flow;
  }

  // Source side of a minimum cut; valid after max_flow.
  std::vector<char> min_cut_side(int s) const {
    std::vector<char> side(first_.size(), 0);
    std::vector<int> stack{s};
    side[s] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int a = first_[u]; a >= 0; a = arcs_[a].next) {
        if (arcs_[a].cap > 0 && !side[arcs_[a].to]) {
          side[arcs_[a].to] = 1;
          stack.push_back(arcs_[a].to);
        }
      }
    }
    return side;
  }

 private:
  struct Arc {
    int to;
    int next;
    std::int64_t cap;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> queue;
    queue.push(s);
    level_[s] = 0;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop();
      for (int a = first_[u]; a >= 0; a = arcs_[a].next) {
        if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
          level_[arcs_[a].to] = level_[u] + 1;
          queue.push(arcs_[a].to);
        }
      }
    }
    return level_[t] >= 0;
  }

  std::int64_t dfs(int u, int t, std::int64_t limit) {
    if (u == t) return limit;
    for (int& a = it_[u]; a >= 0; a = arcs_[a].next) {
      Arc& arc = arcs_[a];
      if (arc.cap > 0 && level_[arc.to] == level_[u] + 1) {
        std::int64_t pushed = dfs(arc.to, t, std::min(limit, arc.cap));
        if (pushed > 0) {
          arc.cap -= pushed;
          arcs_[a ^ 1].cap += pushed;
          return pushed;
        }
      }
    }
    return 0;
  }

  std::vector<int> first_;
  std::vector<Arc> arcs_;
  std::vector<int> level_;
  std::vector<int> it_;
};

}  // namespace atgraph::detail
