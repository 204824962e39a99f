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

// Slow reference implementations used only by tests.

#ifndef EDGEBLOCK_TESTS_ORACLES_H_
#define EDGEBLOCK_TESTS_ORACLES_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <queue>
#include <vector>

#include "edgeblock/graph.h"
#include "edgeblock/random.h"

namespace edgeblock::oracle {

inline std::vector<std::vector<char>> adjacency_matrix(const Graph& g) {
  std::vector<std::vector<char>> a(g.node_count(), std::vector<char>(g.node_count(), 0));
  for (const Edge& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = 1;
  return a;
}

inline std::uint64_t triangles(const Graph& g) {
  const auto a = adjacency_matrix(g);
  std::uint64_t t = 0;
  const NodeId n = g.node_count();
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j)
      for (NodeId k = j + 1; k < n; ++k) t += a[i][j] && a[j][k] && a[i][k];
  return t;
}

// Shortest cycle through edge (u, v) is 1 + dist(u, v) without that edge.
inline std::optional<std::size_t> girth(const Graph& g) {
  std::optional<std::size_t> best;
  const NodeId n = g.node_count();
  for (EdgeId skip = 0; skip < g.edge_count(); ++skip) {
    const Edge& e = g.edge(skip);
    std::vector<int> dist(n, -1);
    std::queue<NodeId> q;
    dist[e.u] = 0;
    q.push(e.u);
    while (!q.empty()) {
      NodeId x = q.front();
      q.pop();
      for (const Neighbor& nb : g.neighbors(x)) {
        if (nb.edge == skip || dist[nb.node] >= 0) continue;
        dist[nb.node] = dist[x] + 1;
        q.push(nb.node);
      }
    }
    if (dist[e.v] >= 0) {
      const std::size_t len = static_cast<std::size_t>(dist[e.v]) + 1;
      if (!best || len < *best) best = len;
    }
  }
  return best;
}

// Dense power iteration with uniform teleport and dangling redistribution.
inline std::vector<double> pagerank(const Graph& g, double damping, int iterations = 5000) {
  const NodeId n = g.node_count();
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  for (NodeId j = 0; j < n; ++j) {
    const std::size_t d = g.degree(j);
    if (d == 0) {
      for (NodeId i = 0; i < n; ++i) m[i][j] = 1.0 / n;
    }
    for (const Neighbor& nb : g.neighbors(j)) m[nb.node][j] = 1.0 / static_cast<double>(d);
  }
  std::vector<double> x(n, 1.0 / n), y(n);
  for (int it = 0; it < iterations; ++it) {
    for (NodeId i = 0; i < n; ++i) {
      double s = 0.0;
      for (NodeId j = 0; j < n; ++j) s += m[i][j] * x[j];
      y[i] = (1.0 - damping) / n + damping * s;
    }
    x.swap(y);
  }
  return x;
}

// All-pairs distances by Floyd-Warshall; infinity when unreachable.
inline std::vector<std::vector<double>> distances(const Graph& g, bool weighted) {
  const NodeId n = g.node_count();
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> d(n, std::vector<double>(n, inf));
  for (NodeId i = 0; i < n; ++i) d[i][i] = 0.0;
  for (const Edge& e : g.edges()) {
    const double w = weighted ? 1.0 - e.weight : 1.0;
    d[e.u][e.v] = d[e.v][e.u] = std::min(d[e.u][e.v], w);
  }
  for (NodeId k = 0; k < n; ++k)
    for (NodeId i = 0; i < n; ++i)
      for (NodeId j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

inline std::vector<double> closeness(const Graph& g, bool weighted) {
  const NodeId n = g.node_count();
  const auto d = distances(g, weighted);
  std::vector<double> c(n, 0.0);
  for (NodeId v = 0; v < n; ++v) {
    double reach = 0, sum = 0;
    for (NodeId u = 0; u < n; ++u) {
      if (std::isfinite(d[v][u])) {
        reach += 1;
        sum += d[v][u];
      }
    }
    if (reach <= 1) continue;
    c[v] = sum > 0 ? (reach - 1) * (reach - 1) / ((n - 1) * sum) : (reach - 1) / (n - 1);
  }
  return c;
}

// Edge betweenness by enumerating every simple path of every pair and
// keeping the lexicographically shortest (length, hops) ones.
inline std::vector<double> betweenness(const Graph& g, bool weighted) {
  const NodeId n = g.node_count();
  std::vector<double> score(g.edge_count(), 0.0);
  for (NodeId s = 0; s < n; ++s) {
    for (NodeId t = s + 1; t < n; ++t) {
      std::vector<std::vector<EdgeId>> best;
      double best_len = std::numeric_limits<double>::infinity();
      std::size_t best_hops = 0;
      std::vector<char> on_path(n, 0);
      std::vector<EdgeId> path;
      std::function<void(NodeId, double)> dfs = [&](NodeId x, double len) {
        if (x == t) {
          const std::size_t hops = path.size();
          if (len < best_len || (len == best_len && hops < best_hops)) {
            best_len = len;
            best_hops = hops;
            best.assign(1, path);
          } else if (len == best_len && hops == best_hops) {
            best.push_back(path);
          }
          return;
        }
        for (const Neighbor& nb : g.neighbors(x)) {
          if (on_path[nb.node]) continue;
          on_path[nb.node] = 1;
          path.push_back(nb.edge);
          dfs(nb.node, len + (weighted ? 1.0 - nb.weight : 1.0));
          path.pop_back();
          on_path[nb.node] = 0;
        }
      };
      on_path[s] = 1;
      dfs(s, 0.0);
      for (const auto& p : best) {
        for (EdgeId e : p) score[e] += 1.0 / static_cast<double>(best.size());
      }
    }
  }
  return score;
}

// Modularity straight from the definition, over edge counts.
inline double modularity(const Graph& g, const std::vector<std::uint32_t>& labels,
                         double resolution) {
  const double m = g.edge_count();
  if (m == 0) return 0.0;
  std::uint32_t c = 0;
  for (auto l : labels) c = std::max(c, l + 1);
  std::vector<double> inside(c, 0.0), degree(c, 0.0);
  for (const Edge& e : g.edges()) {
    if (labels[e.u] == labels[e.v]) inside[labels[e.u]] += 1;
  }
  for (NodeId v = 0; v < g.node_count(); ++v) degree[labels[v]] += g.degree(v);
  double q = 0.0;
  for (std::uint32_t i = 0; i < c; ++i) {
    q += inside[i] / m - resolution * (degree[i] / (2 * m)) * (degree[i] / (2 * m));
  }
  return q;
}

// Calls f on every set partition of [0, n) as a restricted growth string.
inline void for_each_partition(NodeId n,
                               const std::function<void(const std::vector<std::uint32_t>&)>& f) {
  std::vector<std::uint32_t> labels(n, 0);
  std::function<void(NodeId, std::uint32_t)> rec = [&](NodeId i, std::uint32_t used) {
    if (i == n) {
      f(labels);
      return;
    }
    for (std::uint32_t c = 0; c <= used && c < n; ++c) {
      labels[i] = c;
      rec(i + 1, std::max(used, c + 1));
    }
  };
  if (n == 0) {
    f(labels);
    return;
  }
  labels[0] = 0;
  rec(1, 1);
}

inline std::vector<std::vector<std::uint32_t>> best_partitions(const Graph& g,
                                                               double resolution) {
  double best = -std::numeric_limits<double>::infinity();
  std::vector<std::vector<std::uint32_t>> argmax;
  for_each_partition(g.node_count(), [&](const std::vector<std::uint32_t>& labels) {
    const double q = modularity(g, labels, resolution);
    if (q > best + 1e-12) {
      best = q;
      argmax.assign(1, labels);
    } else if (q > best - 1e-12) {
      argmax.push_back(labels);
    }
  });
  return argmax;
}

// Expected spread by recursive live-edge enumeration.
inline double live_edge_spread(const Graph& g, const std::vector<NodeId>& seeds) {
  const EdgeId m = g.edge_count();
  std::vector<char> live(m, 0);
  std::function<double(EdgeId, double)> rec = [&](EdgeId e, double prob) -> double {
    if (e == m) {
      std::vector<char> seen(g.node_count(), 0);
      std::vector<NodeId> stack(seeds.begin(), seeds.end());
      for (NodeId s : seeds) seen[s] = 1;
      std::size_t reached = stack.size();
      while (!stack.empty()) {
        NodeId x = stack.back();
        stack.pop_back();
        for (const Neighbor& nb : g.neighbors(x)) {
          if (live[nb.edge] && !seen[nb.node]) {
            seen[nb.node] = 1;
            ++reached;
            stack.push_back(nb.node);
          }
        }
      }
      return prob * static_cast<double>(reached);
    }
    const double w = g.edge(e).weight;
    live[e] = 1;
    double total = rec(e + 1, prob * w);
    live[e] = 0;
    if (w < 1.0) total += rec(e + 1, prob * (1.0 - w));
    return total;
  };
  return rec(0, 1.0);
}

// Random simple graph on n nodes with up to `edges` distinct edges.
inline Graph random_graph(NodeId n, std::size_t edges, Rng& rng, bool random_weights) {
  std::vector<std::pair<NodeId, NodeId>> pairs;
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  pairs.resize(std::min(edges, pairs.size()));
  std::vector<Edge> list;
  for (auto [u, v] : pairs) {
    const double w = random_weights ? 1.0 - uniform_unit(rng) : 1.0;
    list.push_back({u, v, w});
  }
  return Graph(n, std::move(list));
}

}  // namespace edgeblock::oracle

#endif  // EDGEBLOCK_TESTS_ORACLES_H_
