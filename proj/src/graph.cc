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

#include "edgeblock/graph.h"

#include <algorithm>
#include <queue>
#include <string>

namespace edgeblock {

Graph::Graph(NodeId node_count, std::vector<Edge> edges,
             std::vector<std::string> labels)
    : node_count_(node_count), edges_(std::move(edges)),
      labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != node_count_) {
    throw GraphError("label count " + std::to_string(labels_.size()) +
                     " does not match node count " +
                     std::to_string(node_count_));
  }
  for (Edge& e : edges_) {
    if (e.u >= node_count_ || e.v >= node_count_) {
      throw GraphError("edge (" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + ") has an endpoint out of range");
    }
    if (e.u == e.v) {
      throw GraphError("self-loop at node " + std::to_string(e.u));
    }
    if (!(e.weight > 0.0 && e.weight <= 1.0)) {
      throw GraphError("edge (" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + ") has weight outside (0,1]");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v) {
      throw GraphError("parallel edge (" + std::to_string(edges_[i].u) + "," +
                       std::to_string(edges_[i].v) + ")");
    }
  }
  build_adjacency();
}

void Graph::build_adjacency() {
  offsets_.assign(static_cast<std::size_t>(node_count_) + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (std::size_t i = 1; i < offsets_.size(); ++i) offsets_[i] += offsets_[i - 1];
  adjacency_.resize(2 * edges_.size());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  // Edges are sorted by (u, v), so filling in edge order leaves every list
  // sorted: a node's smaller neighbors arrive (as v-side) before its larger.
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    adjacency_[cursor[e.v]++] = {e.u, id, e.weight};
  }
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    adjacency_[cursor[e.u]++] = {e.v, id, e.weight};
  }
}

const Edge& Graph::edge(EdgeId e) const {
  if (e >= edges_.size()) {
    throw GraphError("edge id " + std::to_string(e) + " out of range");
  }
  return edges_[e];
}

double Graph::weighted_degree(NodeId v) const {
  double total = 0.0;
  for (const Neighbor& nb : neighbors(v)) total += nb.weight;
  return total;
}

std::optional<EdgeId> Graph::find_edge(NodeId a, NodeId b) const {
  if (a >= node_count_ || b >= node_count_) return std::nullopt;
  auto list = neighbors(a);
  auto it = std::lower_bound(
      list.begin(), list.end(), b,
      [](const Neighbor& nb, NodeId target) { return nb.node < target; });
  if (it == list.end() || it->node != b) return std::nullopt;
  return it->edge;
}

std::string Graph::label(NodeId v) const {
  if (labels_.empty()) return std::to_string(v);
  return labels_.at(v);
}

bool Graph::unit_weights() const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.weight == 1.0; });
}

Graph Graph::with_weights(std::span<const double> weights) const {
  if (weights.size() != edges_.size()) {
    throw GraphError("weight vector size does not match edge count");
  }
  std::vector<Edge> edges = edges_;
  for (std::size_t i = 0; i < edges.size(); ++i) edges[i].weight = weights[i];
  return Graph(node_count_, std::move(edges), labels_);
}

double edge_distance(const Graph& g, EdgeId e) { return 1.0 - g.edge(e).weight; }

Graph assign_jaccard_weights(const Graph& g) {
  const NodeId n = g.node_count();
  std::vector<double> weights(g.edge_count());
  std::vector<NodeId> mark(n, n);  // mark[w] == u  <=>  w is a neighbor of u
  for (NodeId u = 0; u < n; ++u) {
    for (const Neighbor& nb : g.neighbors(u)) mark[nb.node] = u;
    for (const Neighbor& nb : g.neighbors(u)) {
      if (nb.node < u) continue;
      std::size_t common = 0;
      for (const Neighbor& w : g.neighbors(nb.node)) {
        if (mark[w.node] == u) ++common;
      }
      // closed-neighborhood intersection adds u and v themselves
      const double numerator = static_cast<double>(common + 2);
      const double denominator =
          static_cast<double>(g.degree(u) + g.degree(nb.node) - common);
      weights[nb.edge] = numerator / denominator;
    }
  }
  return g.with_weights(weights);
}

Graph remove_edges(const Graph& g, std::span<const EdgeId> blocked) {
  std::vector<char> drop(g.edge_count(), 0);
  for (EdgeId e : blocked) {
    if (e >= g.edge_count()) {
      throw GraphError("cannot remove unknown edge id " + std::to_string(e));
    }
    drop[e] = 1;
  }
  std::vector<Edge> kept;
  kept.reserve(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!drop[e]) kept.push_back(g.edges()[e]);
  }
  std::vector<std::string> labels(g.labels().begin(), g.labels().end());
  return Graph(g.node_count(), std::move(kept), std::move(labels));
}

std::vector<NodeId> connected_components(const Graph& g, NodeId* count) {
  const NodeId n = g.node_count();
  constexpr NodeId kUnset = static_cast<NodeId>(-1);
  std::vector<NodeId> component(n, kUnset);
  NodeId next = 0;
  std::vector<NodeId> stack;
  for (NodeId s = 0; s < n; ++s) {
    if (component[s] != kUnset) continue;
    component[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      NodeId v = stack.back();
      stack.pop_back();
      for (const Neighbor& nb : g.neighbors(v)) {
        if (component[nb.node] == kUnset) {
          component[nb.node] = next;
          stack.push_back(nb.node);
        }
      }
    }
    ++next;
  }
  if (count != nullptr) *count = next;
  return component;
}

}  // namespace edgeblock
