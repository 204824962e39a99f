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

// Louvain community detection with a resolution parameter, and the
// community-based edge blocking sweep built on top of it.

#ifndef EDGEBLOCK_COMMUNITY_H_
#define EDGEBLOCK_COMMUNITY_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "edgeblock/graph.h"
#include "edgeblock/random.h"

namespace edgeblock {

using CommunityId = std::uint32_t;

// Node -> community map with dense ids 0..count-1, numbered in order of
// first appearance (node 0 is always in community 0).
class Partition {
 public:
  Partition() = default;
  // Renumbers arbitrary labels densely.
  explicit Partition(std::span<const std::uint32_t> labels);

  static Partition singletons(NodeId n);
  static Partition single_community(NodeId n);

  std::size_t node_count() const { return community_.size(); }
  CommunityId count() const { return count_; }
  CommunityId operator[](NodeId v) const { return community_[v]; }
  std::span<const CommunityId> labels() const { return community_; }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<CommunityId> community_;
  CommunityId count_ = 0;
};

// sum over communities of e_c / m - resolution * (d_c / 2m)^2, over edge
// counts, or over edge weights when `weighted`. Zero for an edgeless graph.
double modularity(const Graph& g, const Partition& p, double resolution, bool weighted = false);

struct LouvainOptions {
  bool weighted = false;
};

struct LouvainResult {
  Partition partition;
  // Modularity after the local-moving phase of each level.
  std::vector<double> level_modularity;
};

// Two-phase Louvain: local moving in an order shuffled by rng until a full
// pass moves nothing, then aggregation, until a level makes no move.
LouvainResult louvain(const Graph& g, double resolution, Rng& rng,
                      const LouvainOptions& options = {});

inline Partition louvain_partition(const Graph& g, double resolution, Rng& rng,
                                   const LouvainOptions& options = {}) {
  return louvain(g, resolution, rng, options).partition;
}

// Edges whose endpoints are in different communities, ascending id.
std::vector<EdgeId> inter_community_edges(const Graph& g, const Partition& p);

enum class SweepCountRule {
  kLastInner,  // count an outer step when the final inner run exceeded k
  kAnyInner,   // count an outer step when any inner run exceeded k
};

struct SweepParams {
  double initial_resolution = 0.01;
  double factor = 1.05;
  std::size_t outer_repetitions = 5;  // h1
  std::size_t inner_repetitions = 5;  // h2
  std::size_t budget = 0;             // k
  std::uint64_t master_seed = kDefaultSeed;
  SweepCountRule count_rule = SweepCountRule::kLastInner;
  bool weighted = false;
  std::size_t threads = 1;
};

struct SweepResult {
  std::vector<EdgeId> edges;  // ascending id, at most `budget` of them
  std::size_t resolution_steps = 0;
  std::size_t louvain_runs = 0;
};

// Geometric resolution sweep. Each outer step runs Louvain inner_repetitions
// times at the current resolution (run i of step t uses
// make_stream(master_seed, {t, i})) and keeps the largest inter-community
// edge set of size at most k seen so far; the resolution is then multiplied
// by `factor`. The loop ends once more than outer_repetitions steps have been
// counted as overshooting k. With k >= m every edge is returned directly.
// Throws std::invalid_argument on invalid parameters.
SweepResult resolution_sweep(const Graph& g, const SweepParams& params);

// The same sweep for several budgets at once. params.budget is ignored; the
// Louvain runs are shared, so result[i] equals resolution_sweep with
// budget = budgets[i].
std::vector<SweepResult> resolution_sweep_budgets(const Graph& g, const SweepParams& params,
                                                  std::span<const std::size_t> budgets);

namespace louvain_detail {

// Weighted graph with self-loops, as produced by Louvain aggregation.
struct LevelGraph {
  std::vector<std::size_t> offsets;
  std::vector<std::pair<std::uint32_t, double>> arcs;  // both directions, no self-loops
  std::vector<double> self_loop;                       // internal weight per node
  std::vector<double> strength;                        // arcs + 2 * self_loop
  double total_weight = 0.0;                           // m

  std::uint32_t node_count() const { return static_cast<std::uint32_t>(self_loop.size()); }

  static LevelGraph from_graph(const Graph& g, bool weighted);
  // Merges each community of `labels` (dense ids) into one node.
  LevelGraph aggregate(std::span<const std::uint32_t> labels, std::uint32_t count) const;
  double modularity(std::span<const std::uint32_t> labels, std::uint32_t count,
                    double resolution) const;
};

}  // namespace louvain_detail

}  // namespace edgeblock

#endif  // EDGEBLOCK_COMMUNITY_H_
