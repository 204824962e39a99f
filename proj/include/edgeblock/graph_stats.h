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

#ifndef EDGEBLOCK_GRAPH_STATS_H_
#define EDGEBLOCK_GRAPH_STATS_H_

#include <cstddef>
#include <cstdint>
#include <optional>

#include "edgeblock/graph.h"

namespace edgeblock {

struct GraphStats {
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  double average_degree = 0.0;
  std::size_t max_degree = 0;
  // Diameter of the largest connected component (first by smallest node id on
  // ties); `connected` is false when the graph has more than one component.
  std::size_t diameter = 0;
  bool connected = true;
  double average_clustering = 0.0;
  std::uint64_t triangles = 0;
};

// Exact statistics. The diameter is computed with a BFS from every node of the
// largest component, split over `threads` workers (0 = hardware).
GraphStats graph_stats(const Graph& g, std::size_t threads = 0);

std::uint64_t triangle_count(const Graph& g);

// Local clustering coefficient per node; nodes of degree < 2 get 0.
std::vector<double> local_clustering(const Graph& g);

// Shortest cycle length, or nullopt for a forest.
std::optional<std::size_t> girth(const Graph& g);

}  // namespace edgeblock

#endif  // EDGEBLOCK_GRAPH_STATS_H_
