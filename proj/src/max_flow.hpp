#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

namespace fcrs::detail {

// Dinic's algorithm on integer capacities.
class MaxFlow {
 public:
  explicit MaxFlow(int nodes) : head_(nodes, -1), level_(nodes), iter_(nodes) {}

  void reset(int nodes) {
    head_.assign(nodes, -1);
    level_.resize(nodes);
    iter_.resize(nodes);
    arcs_.clear();
  }

  void add_edge(int from, int to, std::int64_t cap) {
    arcs_.push_back({to, head_[from], cap});
    head_[from] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, head_[to], 0});
    head_[to] = static_cast<int>(arcs_.size()) - 1;
  }

  std::int64_t run(int source, int sink) {
    std::int64_t flow = 0;
    while (bfs(source, sink)) {
      iter_ = head_;
      while (std::int64_t pushed = dfs(source, sink, std::numeric_limits<std::int64_t>::max())) flow += pushed;
    }
    return flow;
  }

 private:
  struct Arc {
    int to;
    int next;
    std::int64_t cap;
  };

  bool bfs(int source, int sink) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    level_[source] = 0;
    q.push(source);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int a = head_[u]; a != -1; a = arcs_[a].next)
        if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
          level_[arcs_[a].to] = level_[u] + 1;
          q.push(arcs_[a].to);
        }
    }
    return level_[sink] >= 0;
  }

  std::int64_t dfs(int u, int sink, std::int64_t limit) {
    if (u == sink) return limit;
    for (int& a = iter_[u]; a != -1; a = arcs_[a].next) {
      Arc& arc = arcs_[a];
      if (arc.cap <= 0 || level_[arc.to] != level_[u] + 1) continue;
      if (std::int64_t pushed = dfs(arc.to, sink, std::min(limit, arc.cap))) {
        arc.cap -= pushed;
        arcs_[a ^ 1].cap += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<int> head_;
  std::vector<int> level_;
  std::vector<int> iter_;
  std::vector<Arc> arcs_;
};

}  // namespace fcrs::detail
