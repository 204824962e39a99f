// Copyright 2026 The Edgeblock Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "edgeblock/centrality.h"

#include <cmath>
#include <limits>
#include <memory>
#include <queue>
#include <utility>

#include "edgeblock/parallel.h"

namespace edgeblock {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Fixed source blocking so floating-point reductions do not depend on the
// number of threads.
constexpr std::size_t kSourceBlocks = 64;

struct PathLength {
  double length = kInf;
  std::uint32_t hops = std::numeric_limits<std::uint32_t>::max();

  friend bool operator<(const PathLength& a, const PathLength& b) {
    if (a.length != b.length) return a.length < b.length;
    return a.hops < b.hops;
  }
  friend bool operator==(const PathLength&, const PathLength&) = default;
};

// Single-source shortest paths; fills dist, path counts and the settle
// order. Unweighted runs use BFS (length == hops).
class ShortestPathDag {
 public:
  explicit ShortestPathDag(const Graph& g)
      : g_(g), dist_(g.node_count()), sigma_(g.node_count(), 0.0), settled_(g.node_count(), 0) {}

  void run(NodeId source, bool weighted) {
    for (NodeId v : order_) {
      dist_[v] = PathLength{};
      sigma_[v] = 0.0;
      settled_[v] = 0;
    }
    order_.clear();
    dist_[source] = {0.0, 0};
    sigma_[source] = 1.0;
    if (!weighted) {
      order_.push_back(source);
      for (std::size_t head = 0; head < order_.size(); ++head) {
        NodeId v = order_[head];
        for (const Neighbor& nb : g_.neighbors(v)) {
          PathLength cand{dist_[v].length + 1.0, dist_[v].hops + 1};
          if (dist_[nb.node].hops == std::numeric_limits<std::uint32_t>::max()) {
            dist_[nb.node] = cand;
            order_.push_back(nb.node);
          }
          if (dist_[nb.node] == cand) sigma_[nb.node] += sigma_[v];
        }
      }
      return;
    }
    using Item = std::pair<PathLength, NodeId>;
    auto later = [](const Item& a, const Item& b) {
      if (a.first == b.first) return a.second > b.second;
      return b.first < a.first;
    };
    std::priority_queue<Item, std::vector<Item>, decltype(later)> heap(later);
    heap.push({dist_[source], source});
    while (!heap.empty()) {
      auto [d, v] = heap.top();
      heap.pop();
      if (settled_[v] || !(d == dist_[v])) continue;
      settled_[v] = 1;
      order_.push_back(v);
      for (const Neighbor& nb : g_.neighbors(v)) {
        if (settled_[nb.node]) continue;
        PathLength cand{d.length + (1.0 - nb.weight), d.hops + 1};
        if (cand < dist_[nb.node]) {
          dist_[nb.node] = cand;
          sigma_[nb.node] = sigma_[v];
          heap.push({cand, nb.node});
        } else if (cand == dist_[nb.node]) {
          sigma_[nb.node] += sigma_[v];
        }
      }
    }
  }

  // True when edge (v -> w) lies on a shortest path from the source.
  bool is_dag_edge(NodeId v, NodeId w, double weight, bool weighted) const {
    if (dist_[v].hops == std::numeric_limits<std::uint32_t>::max()) return false;
    const double step = weighted ? 1.0 - weight : 1.0;
    return PathLength{dist_[v].length + step, dist_[v].hops + 1} == dist_[w];
  }

  const std::vector<NodeId>& order() const { return order_; }
  const PathLength& dist(NodeId v) const { return dist_[v]; }
  double sigma(NodeId v) const { return sigma_[v]; }

 private:
  const Graph& g_;
  std::vector<PathLength> dist_;
  std::vector<double> sigma_;
  std::vector<NodeId> order_;
  std::vector<char> settled_;
};

}  // namespace

std::vector<double> node_pagerank(const Graph& g, const PageRankOptions& options) {
  if (!(options.damping > 0.0 && options.damping < 1.0)) {
    throw std::invalid_argument("pagerank damping must lie in (0, 1)");
  }
  if (!(options.tolerance > 0.0)) throw std::invalid_argument("pagerank tolerance must be positive");
  const NodeId n = g.node_count();
  if (n == 0) return {};
  const double d = options.damping;
  std::vector<double> rank(n, 1.0 / n);
  std::vector<double> next(n);
  double residual = kInf;
  for (std::size_t iter = 1; iter <= options.max_iterations; ++iter) {
    double dangling = 0.0;
    for (NodeId v = 0; v < n; ++v) {
      if (g.degree(v) == 0) dangling += rank[v];
    }
    const double base = (1.0 - d) / n + d * dangling / n;
    for (NodeId v = 0; v < n; ++v) {
      double inflow = 0.0;
      for (const Neighbor& nb : g.neighbors(v)) {
        inflow += rank[nb.node] / static_cast<double>(g.degree(nb.node));
      }
      next[v] = base + d * inflow;
    }
    residual = 0.0;
    for (NodeId v = 0; v < n; ++v) residual += std::abs(next[v] - rank[v]);
    rank.swap(next);
    if (residual < options.tolerance) return rank;
  }
  throw ConvergenceError(options.max_iterations, residual);
}

std::vector<double> node_closeness(const Graph& g, bool weighted, std::size_t threads) {
  const NodeId n = g.node_count();
  std::vector<double> closeness(n, 0.0);
  if (n <= 1) return closeness;
  const std::size_t workers = worker_count(n, threads);
  std::vector<std::unique_ptr<ShortestPathDag>> dags(workers);
  parallel_for(n, workers, [&](std::size_t s, std::size_t w) {
    if (!dags[w]) dags[w] = std::make_unique<ShortestPathDag>(g);
    ShortestPathDag& dag = *dags[w];
    dag.run(static_cast<NodeId>(s), weighted);
    const double reachable = static_cast<double>(dag.order().size());
    double total = 0.0;
    for (NodeId v : dag.order()) total += dag.dist(v).length;
    if (reachable <= 1.0) return;
    if (total == 0.0) {
      closeness[s] = (reachable - 1.0) / (n - 1);
    } else {
      closeness[s] = (reachable - 1.0) * (reachable - 1.0) / ((n - 1) * total);
    }
  });
  return closeness;
}

std::vector<double> edge_betweenness(const Graph& g, bool weighted, std::size_t threads) {
  const NodeId n = g.node_count();
  const std::size_t blocks = std::min<std::size_t>(kSourceBlocks, std::max<NodeId>(n, 1));
  std::vector<std::vector<double>> partial(blocks);
  const std::size_t workers = worker_count(blocks, threads);
  std::vector<std::unique_ptr<ShortestPathDag>> dags(workers);
  std::vector<std::vector<double>> delta(workers);
  parallel_for(blocks, workers, [&](std::size_t b, std::size_t w) {
    if (!dags[w]) {
      dags[w] = std::make_unique<ShortestPathDag>(g);
      delta[w].assign(n, 0.0);
    }
    ShortestPathDag& dag = *dags[w];
    std::vector<double>& dep = delta[w];
    std::vector<double>& acc = partial[b];
    acc.assign(g.edge_count(), 0.0);
    const NodeId begin = static_cast<NodeId>(b * n / blocks);
    const NodeId end = static_cast<NodeId>((b + 1) * n / blocks);
    for (NodeId s = begin; s < end; ++s) {
      dag.run(s, weighted);
      const auto& order = dag.order();
      for (NodeId v : order) dep[v] = 0.0;
      for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const NodeId x = *it;
        for (const Neighbor& nb : g.neighbors(x)) {
          if (!dag.is_dag_edge(nb.node, x, nb.weight, weighted)) continue;
          const double c = dag.sigma(nb.node) / dag.sigma(x) * (1.0 + dep[x]);
          acc[nb.edge] += c;
          dep[nb.node] += c;
        }
      }
    }
  });
  std::vector<double> score(g.edge_count(), 0.0);
  for (const auto& acc : partial) {
    for (EdgeId e = 0; e < score.size(); ++e) score[e] += acc[e];
  }
  // every unordered pair was counted from both endpoints
  for (double& s : score) s /= 2.0;
  return score;
}

}  // namespace edgeblock
