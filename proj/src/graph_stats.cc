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

#include "edgeblock/graph_stats.h"

#include <algorithm>
#include <limits>
#include <vector>

#include "edgeblock/parallel.h"

namespace edgeblock {
namespace {

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

std::vector<std::uint64_t> triangles_per_node(const Graph& g) {
  const NodeId n = g.node_count();
  std::vector<std::uint64_t> count(n, 0);
  std::vector<NodeId> mark(n, n);
  for (NodeId u = 0; u < n; ++u) {
    for (const Neighbor& nb : g.neighbors(u)) mark[nb.node] = u;
    for (const Neighbor& v : g.neighbors(u)) {
      if (v.node <= u) continue;
      for (const Neighbor& w : g.neighbors(v.node)) {
        if (w.node <= v.node) continue;
        if (mark[w.node] == u) {
          ++count[u];
          ++count[v.node];
          ++count[w.node];
        }
      }
    }
  }
  return count;
}

// Eccentricity of `source` within its component.
std::size_t eccentricity(const Graph& g, NodeId source, std::vector<std::uint32_t>& dist,
                         std::vector<NodeId>& queue) {
  std::fill(dist.begin(), dist.end(), kUnreached);
  queue.clear();
  queue.push_back(source);
  dist[source] = 0;
  std::uint32_t farthest = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    NodeId v = queue[head];
    farthest = dist[v];
    for (const Neighbor& nb : g.neighbors(v)) {
      if (dist[nb.node] == kUnreached) {
        dist[nb.node] = dist[v] + 1;
        queue.push_back(nb.node);
      }
    }
  }
  return farthest;
}

}  // namespace

std::uint64_t triangle_count(const Graph& g) {
  std::uint64_t total = 0;
  for (std::uint64_t c : triangles_per_node(g)) total += c;
  return total / 3;
}

std::vector<double> local_clustering(const Graph& g) {
  auto tri = triangles_per_node(g);
  std::vector<double> coefficient(g.node_count(), 0.0);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const double d = static_cast<double>(g.degree(v));
    if (d >= 2) coefficient[v] = static_cast<double>(tri[v]) / (d * (d - 1) / 2.0);
  }
  return coefficient;
}

GraphStats graph_stats(const Graph& g, std::size_t threads) {
  GraphStats stats;
  const NodeId n = g.node_count();
  stats.node_count = n;
  stats.edge_count = g.edge_count();
  if (n == 0) return stats;
  stats.average_degree = 2.0 * static_cast<double>(g.edge_count()) / n;
  for (NodeId v = 0; v < n; ++v) stats.max_degree = std::max(stats.max_degree, g.degree(v));

  auto tri = triangles_per_node(g);
  std::uint64_t tri_total = 0;
  double clustering_total = 0.0;
  for (NodeId v = 0; v < n; ++v) {
    tri_total += tri[v];
    const double d = static_cast<double>(g.degree(v));
    if (d >= 2) clustering_total += static_cast<double>(tri[v]) / (d * (d - 1) / 2.0);
  }
  stats.triangles = tri_total / 3;
  stats.average_clustering = clustering_total / n;

  NodeId component_count = 0;
  auto component = connected_components(g, &component_count);
  stats.connected = component_count <= 1;
  std::vector<std::size_t> sizes(component_count, 0);
  for (NodeId c : component) ++sizes[c];
  const NodeId largest = static_cast<NodeId>(
      std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  std::vector<NodeId> sources;
  for (NodeId v = 0; v < n; ++v) {
    if (component[v] == largest) sources.push_back(v);
  }

  const std::size_t workers = worker_count(sources.size(), threads);
  std::vector<std::size_t> best(workers, 0);
  std::vector<std::vector<std::uint32_t>> dist(workers);
  std::vector<std::vector<NodeId>> queue(workers);
  parallel_for(sources.size(), workers, [&](std::size_t i, std::size_t w) {
    if (dist[w].empty()) dist[w].resize(n);
    best[w] = std::max(best[w], eccentricity(g, sources[i], dist[w], queue[w]));
  });
  stats.diameter = *std::max_element(best.begin(), best.end());
  return stats;
}

std::optional<std::size_t> girth(const Graph& g) {
  const NodeId n = g.node_count();
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<std::uint32_t> dist(n, kUnreached);
  std::vector<NodeId> parent(n, 0);
  std::vector<NodeId> queue;
  for (NodeId s = 0; s < n; ++s) {
    queue.clear();
    queue.push_back(s);
    dist[s] = 0;
    parent[s] = s;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      NodeId v = queue[head];
      // no cycle through s found from here can beat the current best
      if (2 * static_cast<std::size_t>(dist[v]) + 1 >= best) break;
      for (const Neighbor& nb : g.neighbors(v)) {
        if (dist[nb.node] == kUnreached) {
          dist[nb.node] = dist[v] + 1;
          parent[nb.node] = v;
          queue.push_back(nb.node);
        } else if (parent[v] != nb.node) {
          best = std::min<std::size_t>(best, dist[v] + dist[nb.node] + 1);
        }
      }
    }
    for (NodeId v : queue) dist[v] = kUnreached;
  }
  if (best == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  return best;
}

}  // namespace edgeblock
