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

#ifndef EDGEBLOCK_GRAPH_H_
#define EDGEBLOCK_GRAPH_H_

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace edgeblock {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  double weight = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// One entry of a node's adjacency list.
struct Neighbor {
  NodeId node = 0;
  EdgeId edge = 0;
  double weight = 1.0;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Immutable weighted undirected simple graph.
//
// Node ids are dense in [0, n). Edges are stored once with u < v and sorted
// lexicographically by (u, v), so an EdgeId is also the canonical rank of the
// edge; every tie-break in the library uses ascending EdgeId. Adjacency lists
// are sorted by neighbor id.
class Graph {
 public:
  Graph() = default;

  // Builds a graph from edges over nodes [0, n). Endpoints are reordered so
  // that u < v. Throws GraphError on self-loops, parallel edges, endpoints out
  // of range, weights outside (0, 1], or a label vector of the wrong size.
  Graph(NodeId node_count, std::vector<Edge> edges,
        std::vector<std::string> labels = {});

  NodeId node_count() const { return node_count_; }
  EdgeId edge_count() const { return static_cast<EdgeId>(edges_.size()); }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId e) const;

  std::span<const Neighbor> neighbors(NodeId v) const {
    return {adjacency_.data() + offsets_[v],
            adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }
  double weighted_degree(NodeId v) const;

  std::optional<EdgeId> find_edge(NodeId a, NodeId b) const;

  bool has_labels() const { return !labels_.empty(); }
  // External label of v; the decimal id when no labels are attached.
  std::string label(NodeId v) const;
  std::span<const std::string> labels() const { return labels_; }

  // True when every edge weight is exactly 1.
  bool unit_weights() const;

  // Same structure with new per-edge weights (indexed by EdgeId).
  Graph with_weights(std::span<const double> weights) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.node_count_ == b.node_count_ && a.edges_ == b.edges_;
  }

 private:
  void build_adjacency();

  NodeId node_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_ = {0};
  std::vector<Neighbor> adjacency_;
  std::vector<std::string> labels_;
};

// 1 - weight(e): the distance used by weighted shortest-path measures.
double edge_distance(const Graph& g, EdgeId e);

// Jaccard weights: |closed N(u) ∩ closed N(v)| / |N(u) ∪ N(v)|.
Graph assign_jaccard_weights(const Graph& g);

// Removes the given edges. Node set and labels are kept; the remaining edges
// are re-indexed in canonical order. Throws GraphError on an unknown id.
Graph remove_edges(const Graph& g, std::span<const EdgeId> blocked);

// Connected component id per node, ids dense in order of smallest member.
std::vector<NodeId> connected_components(const Graph& g, NodeId* count = nullptr);

}  // namespace edgeblock

#endif  // EDGEBLOCK_GRAPH_H_
