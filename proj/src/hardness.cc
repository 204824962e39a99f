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

#include "edgeblock/hardness.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "edgeblock/graph_stats.h"
#include "edgeblock/parallel.h"

namespace edgeblock {
namespace {

// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(result);
}

void check_enumerable(std::uint64_t n, std::uint64_t k, const char* what) {
  const std::uint64_t count = binomial(n, k);
  if (count > kMaxBruteForceSubsets) {
    throw InstanceTooLarge(std::string(what) + ": C(" + std::to_string(n) + "," +
                           std::to_string(k) + ") subsets exceed the enumeration limit");
  }
}

// Enumerates k-subsets of [0, universe) in lexicographic order and returns
// the first maximizer of `value`. Work is split by the smallest element;
// each task keeps its own first maximizer and the tasks are merged in order.
template <typename Evaluator>
BruteForceResult max_over_subsets(std::uint32_t universe, std::size_t k, std::size_t threads,
                                  const Evaluator& make_evaluator) {
  if (k == 0) {
    auto eval = make_evaluator();
    std::vector<std::uint32_t> empty;
    return {eval(empty), {}};
  }
  const std::size_t tasks = universe - k + 1;
  std::vector<BruteForceResult> best(tasks);
  std::vector<char> found(tasks, 0);
  parallel_for(tasks, threads, [&](std::size_t first, std::size_t) {
    auto eval = make_evaluator();
    std::vector<std::uint32_t> subset(k);
    subset[0] = static_cast<std::uint32_t>(first);
    for (std::size_t i = 1; i < k; ++i) subset[i] = subset[i - 1] + 1;
    while (true) {
      const std::size_t value = eval(subset);
      if (!found[first] || value > best[first].optimum) {
        found[first] = 1;
        best[first] = {value, subset};
      }
      // next combination with subset[0] fixed
      std::size_t i = k;
      while (i > 1 && subset[i - 1] == universe - (k - i) - 1) --i;
      if (i == 1) break;
      ++subset[i - 1];
      for (std::size_t j = i; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
  });
  BruteForceResult result = best[0];
  for (std::size_t t = 1; t < tasks; ++t) {
    if (best[t].optimum > result.optimum) result = best[t];
  }
  return result;
}

}  // namespace

TransformerOutput transform_instance(const Graph& h) {
  NodeId components = 0;
  connected_components(h, &components);
  if (components != 1) throw GraphError("transform_instance requires a connected graph");
  const NodeId n_h = h.node_count();
  const EdgeId m_h = h.edge_count();
  TransformerOutput out;
  out.z = n_h + m_h;
  std::vector<Edge> edges;
  edges.reserve(2 * static_cast<std::size_t>(m_h) + n_h);
  std::vector<std::string> labels(static_cast<std::size_t>(n_h) + m_h + 1);
  for (NodeId i = 0; i < n_h; ++i) {
    out.x_nodes.push_back(i);
    labels[i] = "x" + std::to_string(i);
    edges.push_back({i, out.z, 1.0});
  }
  for (EdgeId j = 0; j < m_h; ++j) {
    const NodeId y = n_h + j;
    out.y_nodes.push_back(y);
    labels[y] = "y" + std::to_string(j);
    edges.push_back({h.edges()[j].u, y, 1.0});
    edges.push_back({h.edges()[j].v, y, 1.0});
  }
  labels[out.z] = "z";
  out.graph = Graph(out.z + 1, std::move(edges), std::move(labels));
  out.seeds = SeedSet({out.z});
  return out;
}

std::size_t induced_edge_count(const Graph& h, std::span<const NodeId> nodes) {
  std::vector<char> inside(h.node_count(), 0);
  for (NodeId v : nodes) inside.at(v) = 1;
  std::size_t count = 0;
  for (const Edge& e : h.edges()) count += inside[e.u] && inside[e.v];
  return count;
}

std::size_t white_after_blocking(const Graph& g, std::span<const EdgeId> blocked,
                                 const SeedSet& seeds) {
  return g.node_count() - exact_spread_unit_weights(remove_edges(g, blocked), seeds);
}

BruteForceResult brute_force_densest_subgraph(const Graph& h, std::size_t k,
                                              std::size_t threads) {
  if (k >= h.node_count()) {
    throw std::invalid_argument("densest subgraph requires k < n (k=" + std::to_string(k) +
                                ", n=" + std::to_string(h.node_count()) + ")");
  }
  check_enumerable(h.node_count(), k, "densest subgraph");
  auto make_evaluator = [&h]() {
    return [&h, inside = std::vector<char>(h.node_count(), 0)](
               const std::vector<std::uint32_t>& subset) mutable {
      for (NodeId v : subset) inside[v] = 1;
      std::size_t count = 0;
      for (NodeId v : subset) {
        for (const Neighbor& nb : h.neighbors(v)) count += nb.node > v && inside[nb.node];
      }
      for (NodeId v : subset) inside[v] = 0;
      return count;
    };
  };
  return max_over_subsets(h.node_count(), k, threads, make_evaluator);
}

BruteForceResult brute_force_edge_blocking(const Graph& g, std::size_t k, const SeedSet& seeds,
                                           std::size_t threads) {
  if (!g.unit_weights()) {
    throw std::invalid_argument("edge blocking brute force requires unit weights");
  }
  if (k > g.edge_count()) {
    throw std::invalid_argument("cannot block more edges than the graph has");
  }
  check_enumerable(g.edge_count(), k, "edge blocking");
  for (NodeId s : seeds.nodes()) {
    if (s >= g.node_count()) throw GraphError("seed node " + std::to_string(s) + " is not in the graph");
  }
  auto make_evaluator = [&g, &seeds]() {
    return [&g, &seeds, blocked = std::vector<char>(g.edge_count(), 0),
            seen = std::vector<char>(g.node_count(), 0),
            queue = std::vector<NodeId>()](const std::vector<std::uint32_t>& subset) mutable {
      for (EdgeId e : subset) blocked[e] = 1;
      std::fill(seen.begin(), seen.end(), 0);
      queue.assign(seeds.nodes().begin(), seeds.nodes().end());
      for (NodeId s : queue) seen[s] = 1;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        for (const Neighbor& nb : g.neighbors(queue[head])) {
          if (!blocked[nb.edge] && !seen[nb.node]) {
            seen[nb.node] = 1;
            queue.push_back(nb.node);
          }
        }
      }
      for (EdgeId e : subset) blocked[e] = 0;
      return g.node_count() - queue.size();
    };
  };
  return max_over_subsets(g.edge_count(), k, threads, make_evaluator);
}

ReductionVerdict verify_reduction(const Graph& h, std::size_t k, std::size_t threads) {
  if (k < 1 || k > h.node_count()) {
    throw std::invalid_argument("verify_reduction requires 1 <= k <= n");
  }
  NodeId components = 0;
  connected_components(h, &components);
  if (components != 1) throw GraphError("verify_reduction requires a connected graph");

  ReductionVerdict verdict;
  verdict.k = k;
  verdict.girth = girth(h);
  // all n nodes induce the whole graph
  verdict.opt_ds = k == h.node_count() ? h.edge_count()
                                       : brute_force_densest_subgraph(h, k, threads).optimum;
  if (!verdict.girth || k < *verdict.girth) {
    verdict.kind = ReductionCase::kBelowGirth;
    verdict.pass = verdict.opt_ds == k - 1;
    return verdict;
  }
  verdict.kind = ReductionCase::kTransformer;
  const TransformerOutput t = transform_instance(h);
  verdict.opt_eb = brute_force_edge_blocking(t.graph, k, t.seeds, threads).optimum;
  verdict.pass = verdict.opt_ds + k == *verdict.opt_eb;
  return verdict;
}

std::vector<Graph> connected_graphs_up_to_isomorphism(NodeId n) {
  if (n > 6) throw InstanceTooLarge("graph enumeration supports n <= 6");
  if (n == 0) return {};
  std::vector<std::pair<NodeId, NodeId>> pairs;
  std::vector<std::vector<int>> bit(n, std::vector<int>(n, -1));
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) {
      bit[i][j] = bit[j][i] = static_cast<int>(pairs.size());
      pairs.emplace_back(i, j);
    }
  }
  std::vector<std::vector<NodeId>> perms;
  std::vector<NodeId> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<Graph> result;
  const std::uint32_t codes = 1u << pairs.size();
  for (std::uint32_t code = 0; code < codes; ++code) {
    bool canonical = true;
    for (const auto& p : perms) {
      std::uint32_t image = 0;
      for (std::size_t b = 0; b < pairs.size(); ++b) {
        if (code >> b & 1) image |= 1u << bit[p[pairs[b].first]][p[pairs[b].second]];
      }
      if (image < code) {
        canonical = false;
        break;
      }
    }
    if (!canonical) continue;
    std::vector<Edge> edges;
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      if (code >> b & 1) edges.push_back({pairs[b].first, pairs[b].second, 1.0});
    }
    Graph g(n, std::move(edges));
    NodeId components = 0;
    connected_components(g, &components);
    if (components == 1) result.push_back(std::move(g));
  }
  return result;
}

}  // namespace edgeblock
