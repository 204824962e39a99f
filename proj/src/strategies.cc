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

#include "edgeblock/strategies.h"

#include <algorithm>
#include <stdexcept>

namespace edgeblock {
namespace {

struct NamedStrategy {
  StrategyId id;
  std::string_view name;
};

constexpr NamedStrategy kNames[] = {
    {StrategyId::kRandom, "rndm"},
    {StrategyId::kHeaviestWeight, "hwt"},
    {StrategyId::kDegree, "deg"},
    {StrategyId::kWeightedDegree, "wdeg"},
    {StrategyId::kCloseness, "clo"},
    {StrategyId::kWeightedCloseness, "wclo"},
    {StrategyId::kBetweenness, "bet"},
    {StrategyId::kWeightedBetweenness, "wbet"},
    {StrategyId::kPageRank, "pgrk"},
    {StrategyId::kCommunity, "community"},
};

std::vector<EdgeScore> endpoint_sum(const Graph& g, const std::vector<double>& node_score) {
  std::vector<EdgeScore> scores(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edges()[e];
    scores[e] = {e, node_score[edge.u] + node_score[edge.v]};
  }
  return scores;
}

std::vector<EdgeId> top_k(const std::vector<EdgeId>& ranking, std::size_t k) {
  std::vector<EdgeId> chosen(ranking.begin(),
                             ranking.begin() + static_cast<std::ptrdiff_t>(std::min(k, ranking.size())));
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

}  // namespace

std::string_view strategy_name(StrategyId id) {
  for (const auto& entry : kNames) {
    if (entry.id == id) return entry.name;
  }
  return "unknown";
}

std::optional<StrategyId> parse_strategy(std::string_view token) {
  for (const auto& entry : kNames) {
    if (entry.name == token) return entry.id;
  }
  return std::nullopt;
}

bool strategy_is_randomized(StrategyId id) {
  return id == StrategyId::kRandom || id == StrategyId::kCommunity;
}

std::vector<EdgeScore> score_edges(const Graph& g, StrategyId strategy, Rng& rng,
                                   const StrategyParams& params) {
  switch (strategy) {
    case StrategyId::kRandom: {
      std::vector<EdgeScore> scores(g.edge_count());
      for (EdgeId e = 0; e < g.edge_count(); ++e) scores[e] = {e, uniform_unit(rng)};
      return scores;
    }
    case StrategyId::kHeaviestWeight: {
      std::vector<EdgeScore> scores(g.edge_count());
      for (EdgeId e = 0; e < g.edge_count(); ++e) scores[e] = {e, g.edges()[e].weight};
      return scores;
    }
    case StrategyId::kDegree: {
      std::vector<double> degree(g.node_count());
      for (NodeId v = 0; v < g.node_count(); ++v) degree[v] = static_cast<double>(g.degree(v));
      return endpoint_sum(g, degree);
    }
    case StrategyId::kWeightedDegree: {
      std::vector<double> degree(g.node_count());
      for (NodeId v = 0; v < g.node_count(); ++v) degree[v] = g.weighted_degree(v);
      return endpoint_sum(g, degree);
    }
    case StrategyId::kCloseness:
    case StrategyId::kWeightedCloseness:
      return endpoint_sum(
          g, node_closeness(g, strategy == StrategyId::kWeightedCloseness, params.threads));
    case StrategyId::kBetweenness:
    case StrategyId::kWeightedBetweenness: {
      auto bc = edge_betweenness(g, strategy == StrategyId::kWeightedBetweenness, params.threads);
      std::vector<EdgeScore> scores(g.edge_count());
      for (EdgeId e = 0; e < g.edge_count(); ++e) scores[e] = {e, bc[e]};
      return scores;
    }
    case StrategyId::kPageRank:
      return endpoint_sum(g, node_pagerank(g, params.pagerank));
    case StrategyId::kCommunity:
      break;
  }
  throw std::invalid_argument("strategy '" + std::string(strategy_name(strategy)) +
                              "' does not score individual edges");
}

std::vector<EdgeId> rank_edges(std::span<const EdgeScore> scores) {
  std::vector<EdgeScore> sorted(scores.begin(), scores.end());
  std::sort(sorted.begin(), sorted.end(), [](const EdgeScore& a, const EdgeScore& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.edge < b.edge;
  });
  std::vector<EdgeId> ranking(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) ranking[i] = sorted[i].edge;
  return ranking;
}

std::vector<std::vector<EdgeId>> select_blocked_edges_budgets(const Graph& g, StrategyId strategy,
                                                              std::span<const std::size_t> budgets,
                                                              Rng& rng,
                                                              const StrategyParams& params) {
  std::vector<std::vector<EdgeId>> blocked;
  blocked.reserve(budgets.size());
  if (strategy == StrategyId::kCommunity) {
    SweepParams sweep = params.sweep;
    sweep.master_seed = rng();
    for (auto& result : resolution_sweep_budgets(g, sweep, budgets)) {
      blocked.push_back(std::move(result.edges));
    }
    return blocked;
  }
  const auto ranking = rank_edges(score_edges(g, strategy, rng, params));
  for (std::size_t k : budgets) blocked.push_back(top_k(ranking, k));
  return blocked;
}

std::vector<EdgeId> select_blocked_edges(const Graph& g, StrategyId strategy, std::size_t k,
                                         Rng& rng, const StrategyParams& params) {
  const std::size_t budget[] = {k};
  return std::move(select_blocked_edges_budgets(g, strategy, budget, rng, params).front());
}

}  // namespace edgeblock
