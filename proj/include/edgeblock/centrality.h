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

#ifndef EDGEBLOCK_CENTRALITY_H_
#define EDGEBLOCK_CENTRALITY_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "edgeblock/graph.h"

namespace edgeblock {

struct PageRankOptions {
  double damping = 0.85;
  double tolerance = 1e-10;  // L1 change between iterates
  std::size_t max_iterations = 10000;
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(std::size_t iterations, double residual)
      : std::runtime_error("pagerank did not converge after " + std::to_string(iterations) +
                           " iterations (residual " + std::to_string(residual) + ")"),
        residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

// Power iteration on the unweighted graph. Isolated nodes spread their mass
// uniformly. The result sums to 1.
std::vector<double> node_pagerank(const Graph& g, const PageRankOptions& options = {});

// Component-corrected closeness, (r - 1)^2 / ((n - 1) * sum of distances)
// where r counts the nodes reachable from v (v included). Distances are hop
// counts, or 1 - w when `weighted`. An isolated node scores 0; a node whose
// reachable nodes all lie at weighted distance 0 scores (r - 1) / (n - 1).
std::vector<double> node_closeness(const Graph& g, bool weighted, std::size_t threads = 1);

// Edge betweenness over unordered node pairs (Brandes accumulation). With
// `weighted`, path length is the sum of 1 - w and ties in length are broken
// by hop count, so only the fewest-hop minimum-length paths are shortest;
// this keeps zero-length edges well defined.
std::vector<double> edge_betweenness(const Graph& g, bool weighted, std::size_t threads = 1);

}  // namespace edgeblock

#endif  // EDGEBLOCK_CENTRALITY_H_
