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

// Independent Cascade diffusion.
//
// Nodes are white (ignorant), red (spreader) or orange (stifler). In every
// round all nodes update at once: a white node with red neighbours turns red
// with probability 1 - prod(1 - w) over those neighbours, red turns orange,
// orange stays orange. A cascade runs until no red node remains.

#ifndef EDGEBLOCK_CASCADE_H_
#define EDGEBLOCK_CASCADE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "edgeblock/graph.h"
#include "edgeblock/random.h"

namespace edgeblock {

enum class NodeState : std::uint8_t { kWhite, kRed, kOrange };

using Coloring = std::vector<NodeState>;

// Sorted, duplicate-free set of initially red nodes.
class SeedSet {
 public:
  SeedSet() = default;
  explicit SeedSet(std::vector<NodeId> nodes);

  std::span<const NodeId> nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }
  bool empty() const { return nodes_.empty(); }

  // Initial coloring: seeds red, every other node white. Throws GraphError if
  // a seed is not a node of g.
  Coloring initial_coloring(const Graph& g) const;

  friend bool operator==(const SeedSet&, const SeedSet&) = default;

 private:
  std::vector<NodeId> nodes_;
};

struct CascadeOutcome {
  Coloring final_coloring;
  std::size_t rounds = 0;
  std::size_t orange_count = 0;
};

struct SpreadEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t samples = 0;
};

// One synchronous round. White nodes are visited in ascending id; each one
// exposed to at least one red neighbour consumes exactly one uniform draw.
Coloring cascade_round(const Graph& g, const Coloring& c, Rng& rng);

// Rounds until quiescence. Consumes the stream exactly like repeated
// cascade_round calls starting from seeds.initial_coloring(g).
CascadeOutcome run_cascade(const Graph& g, const SeedSet& seeds, Rng& rng);

// Mean and standard error of the final orange count over `samples`
// replicates; replicate i draws from make_stream(master_seed, {i}), so the
// result is bit-identical for any thread count. Throws on samples == 0.
SpreadEstimate estimate_spread(const Graph& g, const SeedSet& seeds,
                               std::size_t samples, std::uint64_t master_seed,
                               std::size_t threads = 1);

// Nodes reachable from the seeds (seeds included). Requires unit weights.
std::size_t exact_spread_unit_weights(const Graph& g, const SeedSet& seeds);

inline constexpr EdgeId kMaxEnumeratedEdges = 25;

// Expected spread by enumerating all 2^m live-edge subsets.
double enumerate_spread_exact(const Graph& g, const SeedSet& seeds);

// Uniform node subset of size max(1, round(fraction * n)), capped at n.
SeedSet sample_seed_set(const Graph& g, double fraction, Rng& rng);

}  // namespace edgeblock

#endif  // EDGEBLOCK_CASCADE_H_
