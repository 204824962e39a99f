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

#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "edgeblock/cascade.h"
#include "edgeblock/generators.h"
#include "edgeblock/hardness.h"
#include "oracles.h"

namespace edgeblock {
namespace {

// Fraction of rounds in which node `target` turns red.
double red_frequency(const Graph& g, const Coloring& c, NodeId target, int trials) {
  int red = 0;
  for (int t = 0; t < trials; ++t) {
    Rng rng = make_stream(99, {static_cast<std::uint64_t>(t)});
    red += cascade_round(g, c, rng)[target] == NodeState::kRed;
  }
  return static_cast<double>(red) / trials;
}

TEST_CASE("cascade_round activation probability") {
  constexpr int kTrials = 40000;
  // 4 sigma at p(1-p)/n
  auto tol = [](double p) { return 4.0 * std::sqrt(p * (1 - p) / kTrials); };

  Graph one(2, {{0, 1, 0.7}});
  Coloring c1 = {NodeState::kRed, NodeState::kWhite};
  CHECK(std::abs(red_frequency(one, c1, 1, kTrials) - 0.7) < tol(0.7));

  Graph two(3, {{0, 2, 0.5}, {1, 2, 0.5}});
  Coloring c2 = {NodeState::kRed, NodeState::kRed, NodeState::kWhite};
  CHECK(std::abs(red_frequency(two, c2, 2, kTrials) - 0.75) < tol(0.75));

  Coloring c3 = {NodeState::kOrange, NodeState::kWhite, NodeState::kWhite};
  Rng rng = make_stream(1, {});
  CHECK(cascade_round(two, c3, rng) == c3);
}

TEST_CASE("cascade_round state machine") {
  Rng rng = make_stream(2, {});
  Graph g = erdos_renyi(30, 0.2, rng);
  g = assign_jaccard_weights(g);
  Coloring c(30, NodeState::kWhite);
  for (NodeId v = 0; v < 30; v += 3) c[v] = NodeState::kRed;
  for (NodeId v = 1; v < 30; v += 7) c[v] = NodeState::kOrange;
  for (int round = 0; round < 10; ++round) {
    Coloring next = cascade_round(g, c, rng);
    for (NodeId v = 0; v < 30; ++v) {
      if (c[v] == NodeState::kRed) CHECK(next[v] == NodeState::kOrange);
      if (c[v] == NodeState::kOrange) CHECK(next[v] == NodeState::kOrange);
      if (c[v] == NodeState::kWhite && next[v] == NodeState::kRed) {
        bool exposed = false;
        for (const Neighbor& nb : g.neighbors(v)) exposed |= c[nb.node] == NodeState::kRed;
        CHECK(exposed);
      }
    }
    c = next;
  }
}

TEST_CASE("run_cascade deterministic cases") {
  Graph path = path_graph(3);
  Rng rng = make_stream(3, {});
  CascadeOutcome out = run_cascade(path, SeedSet({0}), rng);
  CHECK(out.orange_count == 3);
  CHECK(out.rounds == 3);

  CascadeOutcome none = run_cascade(path, SeedSet(), rng);
  CHECK(none.orange_count == 0);
  CHECK(none.rounds == 0);

  CascadeOutcome all = run_cascade(path, SeedSet({0, 1, 2}), rng);
  CHECK(all.orange_count == 3);
  CHECK(all.rounds == 1);

  CHECK_THROWS_AS(run_cascade(path, SeedSet({3}), rng), GraphError);
}

TEST_CASE("run_cascade consumes the stream like repeated rounds") {
  Rng gen = make_stream(4, {});
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = assign_jaccard_weights(erdos_renyi(25, 0.15, gen));
    SeedSet seeds({static_cast<NodeId>(trial % 25), static_cast<NodeId>((trial * 7) % 25)});
    Rng a = make_stream(5, {static_cast<std::uint64_t>(trial)});
    Rng b = a;
    CascadeOutcome out = run_cascade(g, seeds, a);
    Coloring c = seeds.initial_coloring(g);
    std::size_t rounds = 0;
    while (std::count(c.begin(), c.end(), NodeState::kRed) > 0) {
      c = cascade_round(g, c, b);
      ++rounds;
    }
    CHECK(out.final_coloring == c);
    CHECK(out.rounds == rounds);
    CHECK(out.rounds <= g.node_count() + 1);
    CHECK(a() == b());
    std::size_t orange = std::count(c.begin(), c.end(), NodeState::kOrange);
    CHECK(out.orange_count == orange);
    for (NodeId s : seeds.nodes()) CHECK(c[s] == NodeState::kOrange);
  }
}

TEST_CASE("estimate_spread") {
  SpreadEstimate unit = estimate_spread(path_graph(3), SeedSet({0}), 100, 1);
  CHECK(unit.mean == 3.0);
  CHECK(unit.std_error == 0.0);
  CHECK(unit.samples == 100);

  Graph half(3, {{0, 1, 0.5}, {1, 2, 0.5}});
  SpreadEstimate est = estimate_spread(half, SeedSet({0}), 10000, 2);
  CHECK(std::abs(est.mean - 1.75) < 3 * est.std_error);

  CHECK(estimate_spread(half, SeedSet(), 10, 3).mean == 0.0);
  CHECK_THROWS(estimate_spread(half, SeedSet({0}), 0, 3));
}

TEST_CASE("estimate_spread is independent of thread count") {
  Rng gen = make_stream(6, {});
  Graph g = assign_jaccard_weights(erdos_renyi(200, 0.05, gen));
  SeedSet seeds({0, 50, 100});
  SpreadEstimate one = estimate_spread(g, seeds, 500, 77, 1);
  SpreadEstimate four = estimate_spread(g, seeds, 500, 77, 4);
  CHECK(one.mean == four.mean);
  CHECK(one.std_error == four.std_error);
  SpreadEstimate other = estimate_spread(g, seeds, 500, 78, 1);
  CHECK(other.mean != one.mean);
}

TEST_CASE("exact spread for unit weights") {
  CHECK(exact_spread_unit_weights(star_graph(4), SeedSet({0})) == 5);
  Graph two(5, {{0, 1, 1}, {1, 2, 1}, {3, 4, 1}});
  CHECK(exact_spread_unit_weights(two, SeedSet({2})) == 3);
  CHECK(exact_spread_unit_weights(transform_instance(complete_graph(3)).graph,
                                  SeedSet({6})) == 7);
  CHECK_THROWS(exact_spread_unit_weights(Graph(2, {{0, 1, 0.5}}), SeedSet({0})));
}

TEST_CASE("enumerate_spread_exact") {
  Graph half(3, {{0, 1, 0.5}, {1, 2, 0.5}});
  // live subsets: {} -> 1, {01} -> 2, {12} -> 1, {01,12} -> 3
  CHECK(enumerate_spread_exact(half, SeedSet({0})) == doctest::Approx(1.75));
  Graph edge(2, {{0, 1, 0.3}});
  CHECK(enumerate_spread_exact(edge, SeedSet({0})) == doctest::Approx(1.3));
  CHECK(enumerate_spread_exact(path_graph(5), SeedSet({2})) == 5.0);
  CHECK_THROWS(enumerate_spread_exact(complete_graph(8), SeedSet({0})));

  Rng gen = make_stream(8, {});
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = oracle::random_graph(7, 10, gen, true);
    std::vector<NodeId> seeds = {static_cast<NodeId>(trial % 7)};
    CHECK(enumerate_spread_exact(g, SeedSet(seeds)) ==
          doctest::Approx(oracle::live_edge_spread(g, seeds)).epsilon(1e-12));
  }
}

TEST_CASE("spread bounds") {
  Rng gen = make_stream(10, {});
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = oracle::random_graph(8, 12, gen, true);
    SeedSet seeds({0, static_cast<NodeId>(1 + trial % 7)});
    const double exact = enumerate_spread_exact(g, seeds);
    CHECK(exact >= 2.0 - 1e-12);
    CHECK(exact <= 8.0 + 1e-12);
    SpreadEstimate est = estimate_spread(g, seeds, 200, trial);
    CHECK(est.mean >= 2.0);
    CHECK(est.mean <= 8.0);
  }
}

TEST_CASE("sample_seed_set sizes") {
  Rng rng = make_stream(12, {});
  CHECK(sample_seed_set(Graph(4039, {}), 0.001, rng).size() == 4);
  CHECK(sample_seed_set(Graph(1000, {}), 0.001, rng).size() == 1);
  SeedSet all = sample_seed_set(Graph(5, {}), 1.0, rng);
  CHECK(all.nodes().size() == 5);
  CHECK(all == SeedSet({0, 1, 2, 3, 4}));
  CHECK_THROWS(sample_seed_set(Graph(5, {}), 0.0, rng));
  CHECK_THROWS(sample_seed_set(Graph(5, {}), 1.5, rng));
}

TEST_CASE("seed set normalization") {
  SeedSet s({3, 1, 3, 2});
  CHECK(s.size() == 3);
  CHECK(s.nodes()[0] == 1);
  CHECK(s.nodes()[2] == 3);
}

}  // namespace
}  // namespace edgeblock
