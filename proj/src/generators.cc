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

#include "edgeblock/generators.h"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace edgeblock {

Graph path_graph(NodeId n) {
  std::vector<Edge> edges;
  for (NodeId i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1.0});
  return Graph(n, std::move(edges));
}

Graph cycle_graph(NodeId n) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 nodes");
  std::vector<Edge> edges;
  for (NodeId i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, 1.0});
  return Graph(n, std::move(edges));
}

Graph complete_graph(NodeId n) {
  std::vector<Edge> edges;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) edges.push_back({i, j, 1.0});
  }
  return Graph(n, std::move(edges));
}

Graph star_graph(NodeId leaves) {
  std::vector<Edge> edges;
  for (NodeId i = 1; i <= leaves; ++i) edges.push_back({0, i, 1.0});
  return Graph(leaves + 1, std::move(edges));
}

Graph erdos_renyi(NodeId n, double p, Rng& rng) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0, 1]");
  std::vector<Edge> edges;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) {
      if (uniform_unit(rng) < p) edges.push_back({i, j, 1.0});
    }
  }
  return Graph(n, std::move(edges));
}

Graph planted_partition(std::size_t groups, std::size_t group_size, double p_in,
                        double p_out, Rng& rng) {
  if (!(p_in >= 0.0 && p_in <= 1.0 && p_out >= 0.0 && p_out <= 1.0)) {
    throw std::invalid_argument("edge probabilities must lie in [0, 1]");
  }
  const NodeId n = static_cast<NodeId>(groups * group_size);
  std::vector<Edge> edges;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) {
      const double p = i / group_size == j / group_size ? p_in : p_out;
      if (uniform_unit(rng) < p) edges.push_back({i, j, 1.0});
    }
  }
  return Graph(n, std::move(edges));
}

Graph random_connected(NodeId n, std::size_t extra_edges, Rng& rng) {
  std::vector<Edge> edges;
  std::vector<char> used(static_cast<std::size_t>(n) * n, 0);
  for (NodeId i = 1; i < n; ++i) {
    const NodeId parent = std::uniform_int_distribution<NodeId>(0, i - 1)(rng);
    edges.push_back({parent, i, 1.0});
    used[static_cast<std::size_t>(parent) * n + i] = 1;
  }
  std::vector<std::pair<NodeId, NodeId>> free;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) {
      if (!used[static_cast<std::size_t>(i) * n + j]) free.emplace_back(i, j);
    }
  }
  const std::size_t take = std::min(extra_edges, free.size());
  for (std::size_t t = 0; t < take; ++t) {
    const std::size_t pick = std::uniform_int_distribution<std::size_t>(t, free.size() - 1)(rng);
    std::swap(free[t], free[pick]);
    edges.push_back({free[t].first, free[t].second, 1.0});
  }
  return Graph(n, std::move(edges));
}

}  // namespace edgeblock
