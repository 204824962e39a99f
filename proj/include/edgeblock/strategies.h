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

// Edge-blocking strategies. Score-based strategies rate every edge once on
// the original graph and block the top k; the community strategy blocks the
// inter-community edges found by the resolution sweep.

#ifndef EDGEBLOCK_STRATEGIES_H_
#define EDGEBLOCK_STRATEGIES_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "edgeblock/centrality.h"
#include "edgeblock/community.h"
#include "edgeblock/graph.h"
#include "edgeblock/random.h"

namespace edgeblock {

enum class StrategyId {
  kRandom,               // rndm
  kHeaviestWeight,       // hwt
  kDegree,               // deg
  kWeightedDegree,       // wdeg
  kCloseness,            // clo
  kWeightedCloseness,    // wclo
  kBetweenness,          // bet
  kWeightedBetweenness,  // wbet
  kPageRank,             // pgrk
  kCommunity,            // community
};

inline constexpr StrategyId kAllStrategies[] = {
    StrategyId::kRandom,      StrategyId::kHeaviestWeight,      StrategyId::kDegree,
    StrategyId::kWeightedDegree, StrategyId::kCloseness,        StrategyId::kWeightedCloseness,
    StrategyId::kBetweenness, StrategyId::kWeightedBetweenness, StrategyId::kPageRank,
    StrategyId::kCommunity,
};

std::string_view strategy_name(StrategyId id);
std::optional<StrategyId> parse_strategy(std::string_view token);

// Whether the strategy consumes randomness (its output depends on the rng).
bool strategy_is_randomized(StrategyId id);

struct StrategyParams {
  PageRankOptions pagerank;
  SweepParams sweep;  // budget and master_seed are set per call
  std::size_t threads = 1;
};

struct EdgeScore {
  EdgeId edge = 0;
  double score = 0.0;
};

// Throws std::invalid_argument for kCommunity, which has no per-edge score.
std::vector<EdgeScore> score_edges(const Graph& g, StrategyId strategy, Rng& rng,
                                   const StrategyParams& params = {});

// Edge ids ordered by descending score, ties by ascending id.
std::vector<EdgeId> rank_edges(std::span<const EdgeScore> scores);

// Blocked edge set (ascending ids) of size min(k, m) for score strategies, or
// at most k for kCommunity. For kCommunity the sweep seed is drawn from rng.
std::vector<EdgeId> select_blocked_edges(const Graph& g, StrategyId strategy, std::size_t k,
                                         Rng& rng, const StrategyParams& params = {});

// Blocked sets for several budgets from one scoring (or one shared sweep).
std::vector<std::vector<EdgeId>> select_blocked_edges_budgets(const Graph& g, StrategyId strategy,
                                                              std::span<const std::size_t> budgets,
                                                              Rng& rng,
                                                              const StrategyParams& params = {});

}  // namespace edgeblock

#endif  // EDGEBLOCK_STRATEGIES_H_
