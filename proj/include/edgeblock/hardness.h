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

// Exhaustive checks of the densest-subgraph -> edge-blocking reduction on
// small instances.
//
// The incidence gadget maps H to G with one x-node per node of H, one y-node
// per edge of H and a hub z: every y is joined to the x-nodes of its edge's
// endpoints, every x is joined to z, all weights are 1, and z is the only
// red node. verify_reduction tests
//
//   OPT_DS(H, k) == OPT_EB(G, k, {z}) - k     for girth(H) <= k <= n_H,
//
// and OPT_DS(H, k) == k - 1 for k < girth(H). The first identity does not
// hold in general; see the K4 case in tests/hardness_test.cc.

#ifndef EDGEBLOCK_HARDNESS_H_
#define EDGEBLOCK_HARDNESS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "edgeblock/cascade.h"
#include "edgeblock/graph.h"

namespace edgeblock {

class InstanceTooLarge : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct TransformerOutput {
  Graph graph;
  std::vector<NodeId> x_nodes;  // x_i for node i of H
  std::vector<NodeId> y_nodes;  // y_j for edge j of H
  NodeId z = 0;
  SeedSet seeds;                // {z}
};

// Throws GraphError when h is not connected.
TransformerOutput transform_instance(const Graph& h);

// Largest number of subsets a brute force will enumerate.
inline constexpr std::uint64_t kMaxBruteForceSubsets = std::uint64_t{1} << 27;

struct BruteForceResult {
  std::size_t optimum = 0;
  // First maximizer in lexicographic subset order; nodes for the densest
  // subgraph, edge ids for edge blocking.
  std::vector<std::uint32_t> witness;
};

// Maximum number of edges induced by k nodes; requires k < n.
BruteForceResult brute_force_densest_subgraph(const Graph& h, std::size_t k,
                                              std::size_t threads = 1);

// Maximum number of nodes left white after blocking k edges; requires unit
// weights and k <= m.
BruteForceResult brute_force_edge_blocking(const Graph& g, std::size_t k, const SeedSet& seeds,
                                           std::size_t threads = 1);

// Independent evaluators used to re-check witnesses.
std::size_t induced_edge_count(const Graph& h, std::span<const NodeId> nodes);
std::size_t white_after_blocking(const Graph& g, std::span<const EdgeId> blocked,
                                 const SeedSet& seeds);

enum class ReductionCase { kBelowGirth, kTransformer };

struct ReductionVerdict {
  ReductionCase kind = ReductionCase::kBelowGirth;
  std::size_t k = 0;
  std::optional<std::size_t> girth;
  std::size_t opt_ds = 0;
  std::optional<std::size_t> opt_eb;  // set for kTransformer
  bool pass = false;
};

// Requires a connected h and 1 <= k <= n_H.
ReductionVerdict verify_reduction(const Graph& h, std::size_t k, std::size_t threads = 1);

// One representative per isomorphism class of connected simple graphs on n
// nodes (n <= 6), each with the lexicographically smallest edge code.
std::vector<Graph> connected_graphs_up_to_isomorphism(NodeId n);

}  // namespace edgeblock

#endif  // EDGEBLOCK_HARDNESS_H_
