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

// Edge-list ingestion (SNAP-style) and weighted edge-list serialization.

#ifndef EDGEBLOCK_GRAPH_IO_H_
#define EDGEBLOCK_GRAPH_IO_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "edgeblock/graph.h"

namespace edgeblock {

enum class EdgeListFormat {
  kAuto,        // two or three columns, decided per line
  kUnweighted,  // "u v"; a third column is a parse error
  kWeighted,    // "u v w" with w in (0, 1]
};

struct LoadReport {
  std::size_t lines = 0;
  std::size_t comment_lines = 0;
  std::size_t duplicate_edges = 0;
  std::size_t self_loops = 0;
};

struct LoadedGraph {
  Graph graph;
  LoadReport report;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Lines starting with '#' or '%' are comments; blank lines are skipped. Node
// tokens are arbitrary strings. When every token is a non-negative integer,
// dense ids follow ascending numeric order; otherwise first appearance.
// Unweighted edges get weight 1. Duplicates (either orientation) keep the
// first occurrence; self-loops are dropped. Both are counted in the report.
LoadedGraph parse_edge_list(std::istream& in,
                            EdgeListFormat format = EdgeListFormat::kAuto);
LoadedGraph load_edge_list(const std::filesystem::path& path,
                           EdgeListFormat format = EdgeListFormat::kAuto);

// One "u v w" line per edge using external labels; w is printed with 17
// significant digits so that parsing it back reproduces the weight exactly.
void write_weighted_edge_list(std::ostream& out, const Graph& g);

}  // namespace edgeblock

#endif  // EDGEBLOCK_GRAPH_IO_H_
