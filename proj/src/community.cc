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

#include "edgeblock/community.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "edgeblock/parallel.h"

namespace edgeblock {

Partition::Partition(std::span<const std::uint32_t> labels) : community_(labels.size()) {
  std::vector<CommunityId> remap;
  constexpr CommunityId kUnset = static_cast<CommunityId>(-1);
  for (std::size_t v = 0; v < labels.size(); ++v) {
    const std::uint32_t l = labels[v];
    if (l >= remap.size()) remap.resize(static_cast<std::size_t>(l) + 1, kUnset);
    if (remap[l] == kUnset) remap[l] = count_++;
    community_[v] = remap[l];
  }
}

Partition Partition::singletons(NodeId n) {
  std::vector<std::uint32_t> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  return Partition(labels);
}

Partition Partition::single_community(NodeId n) {
  std::vector<std::uint32_t> labels(n, 0);
  return Partition(labels);
}

double modularity(const Graph& g, const Partition& p, double resolution, bool weighted) {
  if (p.node_count() != g.node_count()) {
    throw std::invalid_argument("partition size does not match graph");
  }
  std::vector<double> internal(p.count(), 0.0);
  std::vector<double> degree(p.count(), 0.0);
  double total = 0.0;
  for (const Edge& e : g.edges()) {
    const double w = weighted ? e.weight : 1.0;
    total += w;
    degree[p[e.u]] += w;
    degree[p[e.v]] += w;
    if (p[e.u] == p[e.v]) internal[p[e.u]] += w;
  }
  if (total == 0.0) return 0.0;
  double q = 0.0;
  for (CommunityId c = 0; c < p.count(); ++c) {
    const double share = degree[c] / (2.0 * total);
    q += internal[c] / total - resolution * share * share;
  }
  return q;
}

std::vector<EdgeId> inter_community_edges(const Graph& g, const Partition& p) {
  if (p.node_count() != g.node_count()) {
    throw std::invalid_argument("partition size does not match graph");
  }
  std::vector<EdgeId> cut;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edges()[e];
    if (p[edge.u] != p[edge.v]) cut.push_back(e);
  }
  return cut;
}

namespace louvain_detail {

LevelGraph LevelGraph::from_graph(const Graph& g, bool weighted) {
  LevelGraph level;
  const NodeId n = g.node_count();
  level.offsets.resize(static_cast<std::size_t>(n) + 1, 0);
  level.self_loop.assign(n, 0.0);
  level.strength.assign(n, 0.0);
  level.arcs.reserve(2 * static_cast<std::size_t>(g.edge_count()));
  for (NodeId v = 0; v < n; ++v) {
    for (const Neighbor& nb : g.neighbors(v)) {
      const double w = weighted ? nb.weight : 1.0;
      level.arcs.emplace_back(nb.node, w);
      level.strength[v] += w;
    }
    level.offsets[v + 1] = level.arcs.size();
  }
  for (const Edge& e : g.edges()) level.total_weight += weighted ? e.weight : 1.0;
  return level;
}

LevelGraph LevelGraph::aggregate(std::span<const std::uint32_t> labels,
                                 std::uint32_t count) const {
  LevelGraph coarse;
  coarse.self_loop.assign(count, 0.0);
  coarse.strength.assign(count, 0.0);
  coarse.offsets.assign(static_cast<std::size_t>(count) + 1, 0);
  coarse.total_weight = total_weight;

  std::vector<std::vector<std::uint32_t>> members(count);
  for (std::uint32_t v = 0; v < node_count(); ++v) members[labels[v]].push_back(v);

  std::vector<double> link(count, 0.0);
  std::vector<std::uint32_t> touched;
  for (std::uint32_t c = 0; c < count; ++c) {
    for (std::uint32_t v : members[c]) {
      coarse.self_loop[c] += self_loop[v];
      coarse.strength[c] += strength[v];
      for (std::size_t a = offsets[v]; a < offsets[v + 1]; ++a) {
        const auto [u, w] = arcs[a];
        const std::uint32_t d = labels[u];
        if (d == c) {
          coarse.self_loop[c] += w / 2.0;  // each internal arc is seen from both ends
          continue;
        }
        if (link[d] == 0.0) touched.push_back(d);
        link[d] += w;
      }
    }
    std::sort(touched.begin(), touched.end());
    for (std::uint32_t d : touched) {
      coarse.arcs.emplace_back(d, link[d]);
      link[d] = 0.0;
    }
    touched.clear();
    coarse.offsets[c + 1] = coarse.arcs.size();
  }
  return coarse;
}

double LevelGraph::modularity(std::span<const std::uint32_t> labels, std::uint32_t count,
                              double resolution) const {
  if (total_weight == 0.0) return 0.0;
  std::vector<double> internal(count, 0.0);
  std::vector<double> degree(count, 0.0);
  for (std::uint32_t v = 0; v < node_count(); ++v) {
    internal[labels[v]] += self_loop[v];
    degree[labels[v]] += strength[v];
    for (std::size_t a = offsets[v]; a < offsets[v + 1]; ++a) {
      if (labels[arcs[a].first] == labels[v]) internal[labels[v]] += arcs[a].second / 2.0;
    }
  }
  double q = 0.0;
  for (std::uint32_t c = 0; c < count; ++c) {
    const double share = degree[c] / (2.0 * total_weight);
    q += internal[c] / total_weight - resolution * share * share;
  }
  return q;
}

}  // namespace louvain_detail

namespace {

using louvain_detail::LevelGraph;

// Moves below this gain are treated as no improvement.
constexpr double kMinGain = 1e-12;

// Local moving on one level. Returns true if any node changed community.
// `labels` starts as singletons and ends dense-renumbered with `count` set.
bool local_moving(const LevelGraph& level, double resolution, Rng& rng,
                  std::vector<std::uint32_t>& labels, std::uint32_t& count) {
  const std::uint32_t n = level.node_count();
  labels.resize(n);
  std::iota(labels.begin(), labels.end(), 0);
  std::vector<double> total(level.strength);
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<double> link(n, 0.0);
  std::vector<char> linked(n, 0);
  std::vector<std::uint32_t> neighbours;
  const double two_m = 2.0 * level.total_weight;
  bool moved_any = false;
  bool moved = level.total_weight > 0.0;
  while (moved) {
    moved = false;
    for (std::uint32_t v : order) {
      const std::uint32_t home = labels[v];
      const double k = level.strength[v];
      neighbours.clear();
      for (std::size_t a = level.offsets[v]; a < level.offsets[v + 1]; ++a) {
        const auto [u, w] = level.arcs[a];
        const std::uint32_t c = labels[u];
        if (!linked[c]) {
          linked[c] = 1;
          neighbours.push_back(c);
        }
        link[c] += w;
      }
      total[home] -= k;
      std::uint32_t best = home;
      double best_gain = link[home] - resolution * total[home] * k / two_m;
      for (std::uint32_t c : neighbours) {
        const double gain = link[c] - resolution * total[c] * k / two_m;
        if (gain > best_gain + kMinGain) {
          best_gain = gain;
          best = c;
        }
      }
      total[best] += k;
      for (std::uint32_t c : neighbours) {
        link[c] = 0.0;
        linked[c] = 0;
      }
      link[home] = 0.0;
      if (best != home) {
        labels[v] = best;
        moved = true;
        moved_any = true;
      }
    }
  }
  Partition dense(labels);
  std::copy(dense.labels().begin(), dense.labels().end(), labels.begin());
  count = dense.count();
  return moved_any;
}

void check_sweep_params(const SweepParams& params) {
  if (!(params.initial_resolution > 0.0)) {
    throw std::invalid_argument("initial resolution must be positive");
  }
  if (!(params.factor > 1.0)) throw std::invalid_argument("increasing factor must exceed 1");
  if (params.outer_repetitions < 1 || params.inner_repetitions < 1) {
    throw std::invalid_argument("sweep repetitions must be at least 1");
  }
}

}  // namespace

LouvainResult louvain(const Graph& g, double resolution, Rng& rng,
                      const LouvainOptions& options) {
  if (!(resolution > 0.0)) throw std::invalid_argument("resolution must be positive");
  LouvainResult result;
  std::vector<std::uint32_t> assignment(g.node_count());
  std::iota(assignment.begin(), assignment.end(), 0);
  LevelGraph level = LevelGraph::from_graph(g, options.weighted);
  std::vector<std::uint32_t> labels;
  std::uint32_t count = 0;
  while (level.node_count() > 0) {
    const bool moved = local_moving(level, resolution, rng, labels, count);
    if (!moved) break;
    for (auto& a : assignment) a = labels[a];
    result.level_modularity.push_back(level.modularity(labels, count, resolution));
    if (count == level.node_count()) break;
    level = level.aggregate(labels, count);
  }
  result.partition = Partition(assignment);
  return result;
}

std::vector<SweepResult> resolution_sweep_budgets(const Graph& g, const SweepParams& params,
                                                  std::span<const std::size_t> budgets) {
  check_sweep_params(params);
  struct State {
    std::size_t k;
    std::size_t count = 0;
    bool active = true;
    SweepResult result;
  };
  std::vector<State> states;
  for (std::size_t k : budgets) {
    State s{k, 0, true, {}};
    if (k >= g.edge_count()) {
      s.result.edges.resize(g.edge_count());
      std::iota(s.result.edges.begin(), s.result.edges.end(), 0);
      s.active = false;
    }
    states.push_back(std::move(s));
  }

  const LouvainOptions options{params.weighted};
  const std::size_t h2 = params.inner_repetitions;
  std::vector<std::vector<EdgeId>> cuts(h2);
  double resolution = params.initial_resolution;
  for (std::size_t step = 0;; ++step) {
    if (std::none_of(states.begin(), states.end(), [](const State& s) { return s.active; })) break;
    parallel_for(h2, params.threads, [&](std::size_t i, std::size_t) {
      Rng rng = make_stream(params.master_seed, {step, i});
      cuts[i] = inter_community_edges(g, louvain_partition(g, resolution, rng, options));
    });
    for (State& s : states) {
      if (!s.active) continue;
      bool any_over = false;
      for (const auto& cut : cuts) {
        if (cut.size() > s.result.edges.size() && cut.size() <= s.k) s.result.edges = cut;
        any_over = any_over || cut.size() > s.k;
      }
      s.result.resolution_steps = step + 1;
      s.result.louvain_runs += h2;
      const bool over = params.count_rule == SweepCountRule::kLastInner ? cuts.back().size() > s.k
                                                                          : any_over;
      if (over) ++s.count;
      if (s.count > params.outer_repetitions) s.active = false;
    }
    resolution *= params.factor;
  }

  std::vector<SweepResult> results;
  results.reserve(states.size());
  for (State& s : states) results.push_back(std::move(s.result));
  return results;
}

SweepResult resolution_sweep(const Graph& g, const SweepParams& params) {
  const std::size_t budget[] = {params.budget};
  return std::move(resolution_sweep_budgets(g, params, budget).front());
}

}  // namespace edgeblock
