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

#include "edgeblock/cascade.h"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>
#include <string>

#include "edgeblock/parallel.h"

namespace edgeblock {

SeedSet::SeedSet(std::vector<NodeId> nodes) : nodes_(std::move(nodes)) {
  std::sort(nodes_.begin(), nodes_.end());
  nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
}

Coloring SeedSet::initial_coloring(const Graph& g) const {
  Coloring c(g.node_count(), NodeState::kWhite);
  for (NodeId v : nodes_) {
    if (v >= g.node_count()) {
      throw GraphError("seed node " + std::to_string(v) + " is not in the graph");
    }
    c[v] = NodeState::kRed;
  }
  return c;
}

Coloring cascade_round(const Graph& g, const Coloring& c, Rng& rng) {
  if (c.size() != g.node_count()) throw GraphError("coloring size does not match graph");
  Coloring next = c;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    switch (c[v]) {
      case NodeState::kRed:
        next[v] = NodeState::kOrange;
        break;
      case NodeState::kOrange:
        break;
      case NodeState::kWhite: {
        bool exposed = false;
        double stay_white = 1.0;
        for (const Neighbor& nb : g.neighbors(v)) {
          if (c[nb.node] == NodeState::kRed) {
            exposed = true;
            stay_white *= 1.0 - nb.weight;
          }
        }
        if (exposed && uniform_unit(rng) < 1.0 - stay_white) next[v] = NodeState::kRed;
        break;
      }
    }
  }
  return next;
}

namespace {

// Frontier-based simulator with reusable buffers. Produces the same
// trajectory as repeated cascade_round: the frontier is kept sorted, so each
// candidate accumulates its factors in ascending red-neighbour order and
// candidates draw in ascending id.
class CascadeSimulator {
 public:
  explicit CascadeSimulator(const Graph& g)
      : g_(g), state_(g.node_count(), NodeState::kWhite), stay_white_(g.node_count(), 1.0),
        is_candidate_(g.node_count(), 0) {}

  // Returns (orange count, rounds). Leaves state_ reflecting the final colors
  // until reset() is called.
  std::pair<std::size_t, std::size_t> run(const SeedSet& seeds, Rng& rng) {
    frontier_.assign(seeds.nodes().begin(), seeds.nodes().end());
    for (NodeId v : frontier_) {
      if (v >= g_.node_count()) {
        throw GraphError("seed node " + std::to_string(v) + " is not in the graph");
      }
      state_[v] = NodeState::kRed;
      touched_.push_back(v);
    }
    std::size_t orange = 0;
    std::size_t rounds = 0;
    while (!frontier_.empty()) {
      ++rounds;
      candidates_.clear();
      for (NodeId r : frontier_) {
        for (const Neighbor& nb : g_.neighbors(r)) {
          if (state_[nb.node] != NodeState::kWhite) continue;
          if (!is_candidate_[nb.node]) {
            is_candidate_[nb.node] = 1;
            stay_white_[nb.node] = 1.0;
            candidates_.push_back(nb.node);
          }
          stay_white_[nb.node] *= 1.0 - nb.weight;
        }
      }
      for (NodeId r : frontier_) state_[r] = NodeState::kOrange;
      orange += frontier_.size();
      std::sort(candidates_.begin(), candidates_.end());
      frontier_.clear();
      for (NodeId v : candidates_) {
        is_candidate_[v] = 0;
        if (uniform_unit(rng) < 1.0 - stay_white_[v]) {
          state_[v] = NodeState::kRed;
          touched_.push_back(v);
          frontier_.push_back(v);
        }
      }
    }
    return {orange, rounds};
  }

  const Coloring& state() const { return state_; }

  void reset() {
    for (NodeId v : touched_) state_[v] = NodeState::kWhite;
    touched_.clear();
  }

 private:
  const Graph& g_;
  Coloring state_;
  std::vector<double> stay_white_;
  std::vector<char> is_candidate_;
  std::vector<NodeId> frontier_;
  std::vector<NodeId> candidates_;
  std::vector<NodeId> touched_;
};

}  // namespace

CascadeOutcome run_cascade(const Graph& g, const SeedSet& seeds, Rng& rng) {
  CascadeSimulator sim(g);
  auto [orange, rounds] = sim.run(seeds, rng);
  return {sim.state(), rounds, orange};
}

SpreadEstimate estimate_spread(const Graph& g, const SeedSet& seeds, std::size_t samples,
                               std::uint64_t master_seed, std::size_t threads) {
  if (samples == 0) throw std::invalid_argument("estimate_spread needs at least one sample");
  std::vector<std::uint32_t> counts(samples);
  const std::size_t workers = worker_count(samples, threads);
  std::vector<std::unique_ptr<CascadeSimulator>> sims(workers);
  parallel_for(samples, workers, [&](std::size_t i, std::size_t w) {
    if (!sims[w]) sims[w] = std::make_unique<CascadeSimulator>(g);
    Rng rng = make_stream(master_seed, {i});
    counts[i] = static_cast<std::uint32_t>(sims[w]->run(seeds, rng).first);
    sims[w]->reset();
  });
  // integer accumulation: exact and independent of scheduling
  unsigned __int128 sum = 0;
  unsigned __int128 sum_sq = 0;
  for (std::uint32_t c : counts) {
    sum += c;
    sum_sq += static_cast<unsigned __int128>(c) * c;
  }
  SpreadEstimate est;
  est.samples = samples;
  est.mean = static_cast<double>(static_cast<long double>(sum) / samples);
  if (samples > 1) {
    const unsigned __int128 spread = samples * sum_sq - sum * sum;
    const long double variance =
        static_cast<long double>(spread) /
        (static_cast<long double>(samples) * static_cast<long double>(samples - 1));
    est.std_error = static_cast<double>(std::sqrt(variance / samples));
  }
  return est;
}

std::size_t exact_spread_unit_weights(const Graph& g, const SeedSet& seeds) {
  if (!g.unit_weights()) {
    throw std::invalid_argument("exact_spread_unit_weights requires every weight to be 1");
  }
  std::vector<char> seen(g.node_count(), 0);
  std::vector<NodeId> queue;
  for (NodeId s : seeds.nodes()) {
    if (s >= g.node_count()) throw GraphError("seed node " + std::to_string(s) + " is not in the graph");
    seen[s] = 1;
    queue.push_back(s);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const Neighbor& nb : g.neighbors(queue[head])) {
      if (!seen[nb.node]) {
        seen[nb.node] = 1;
        queue.push_back(nb.node);
      }
    }
  }
  return queue.size();
}

double enumerate_spread_exact(const Graph& g, const SeedSet& seeds) {
  const EdgeId m = g.edge_count();
  if (m > kMaxEnumeratedEdges) {
    throw std::invalid_argument("enumerate_spread_exact supports at most " +
                                std::to_string(kMaxEnumeratedEdges) + " edges, got " +
                                std::to_string(m));
  }
  for (NodeId s : seeds.nodes()) {
    if (s >= g.node_count()) throw GraphError("seed node " + std::to_string(s) + " is not in the graph");
  }
  const auto edges = g.edges();
  std::vector<char> seen(g.node_count());
  std::vector<NodeId> queue;
  double expected = 0.0;
  for (std::uint64_t live = 0; live < (std::uint64_t{1} << m); ++live) {
    double probability = 1.0;
    for (EdgeId e = 0; e < m; ++e) {
      probability *= (live >> e & 1) ? edges[e].weight : 1.0 - edges[e].weight;
    }
    if (probability == 0.0) continue;
    std::fill(seen.begin(), seen.end(), 0);
    queue.assign(seeds.nodes().begin(), seeds.nodes().end());
    for (NodeId s : queue) seen[s] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const Neighbor& nb : g.neighbors(queue[head])) {
        if ((live >> nb.edge & 1) && !seen[nb.node]) {
          seen[nb.node] = 1;
          queue.push_back(nb.node);
        }
      }
    }
    expected += probability * static_cast<double>(queue.size());
  }
  return expected;
}

SeedSet sample_seed_set(const Graph& g, double fraction, Rng& rng) {
  if (!(fraction > 0.0 && fraction <= 1.0)) {
    throw std::invalid_argument("seed fraction must lie in (0, 1]");
  }
  const std::size_t n = g.node_count();
  const auto wanted = static_cast<std::size_t>(std::llround(fraction * static_cast<double>(n)));
  const std::size_t size = std::min(n, std::max<std::size_t>(1, wanted));
  std::vector<NodeId> all(n);
  std::iota(all.begin(), all.end(), 0);
  std::vector<NodeId> picked;
  picked.reserve(size);
  std::sample(all.begin(), all.end(), std::back_inserter(picked), size, rng);
  return SeedSet(std::move(picked));
}

}  // namespace edgeblock
