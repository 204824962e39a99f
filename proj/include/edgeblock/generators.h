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

// Synthetic graph families for tests and experiments. All weights are 1.

#ifndef EDGEBLOCK_GENERATORS_H_
#define EDGEBLOCK_GENERATORS_H_

#include <cstddef>

#include "edgeblock/graph.h"
#include "edgeblock/random.h"

namespace edgeblock {

Graph path_graph(NodeId n);
Graph cycle_graph(NodeId n);  // n >= 3
Graph complete_graph(NodeId n);
Graph star_graph(NodeId leaves);  // hub is node 0

// G(n, p): every pair independently, in lexicographic pair order.
Graph erdos_renyi(NodeId n, double p, Rng& rng);

// `groups` blocks of `group_size` consecutive node ids; pairs inside a block
// are joined with probability p_in, pairs across blocks with p_out.
Graph planted_partition(std::size_t groups, std::size_t group_size, double p_in,
                        double p_out, Rng& rng);

// Random spanning tree (each node i > 0 attaches to a uniform earlier node)
// plus `extra_edges` distinct random non-tree edges, capped by the pairs left.
Graph random_connected(NodeId n, std::size_t extra_edges, Rng& rng);

}  // namespace edgeblock

#endif  // EDGEBLOCK_GENERATORS_H_
