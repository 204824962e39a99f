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

#include "edgeblock/graph_io.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

namespace edgeblock {
namespace {

std::vector<std::string_view> split_whitespace(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::optional<std::uint64_t> as_unsigned(std::string_view token) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

struct RawEdge {
  NodeId a;
  NodeId b;
  double weight;
};

}  // namespace

LoadedGraph parse_edge_list(std::istream& in, EdgeListFormat format) {
  LoadReport report;
  std::unordered_map<std::string, NodeId> ids;
  std::vector<std::string> labels;
  std::vector<RawEdge> raw;
  std::size_t data_lines = 0;

  auto intern = [&](std::string_view token) {
    auto [it, inserted] =
        ids.try_emplace(std::string(token), static_cast<NodeId>(labels.size()));
    if (inserted) labels.emplace_back(token);
    return it->second;
  };

  std::string line;
  while (std::getline(in, line)) {
    ++report.lines;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto tokens = split_whitespace(line);
    if (tokens.empty()) continue;
    if (tokens[0].front() == '#' || tokens[0].front() == '%') {
      ++report.comment_lines;
      continue;
    }
    ++data_lines;
    const bool weighted_line = tokens.size() == 3;
    if (tokens.size() < 2 || tokens.size() > 3 ||
        (weighted_line && format == EdgeListFormat::kUnweighted) ||
        (!weighted_line && format == EdgeListFormat::kWeighted)) {
      throw ParseError(report.lines, "expected " +
                                         std::string(format == EdgeListFormat::kWeighted
                                                         ? "'u v w'"
                                                         : "'u v'") +
                                         ", got " + std::to_string(tokens.size()) +
                                         " fields");
    }
    double weight = 1.0;
    if (weighted_line) {
      std::string_view w = tokens[2];
      auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), weight);
      if (ec != std::errc() || ptr != w.data() + w.size() || !std::isfinite(weight)) {
        throw ParseError(report.lines, "malformed weight '" + std::string(w) + "'");
      }
      if (!(weight > 0.0 && weight <= 1.0)) {
        throw ParseError(report.lines, "weight " + std::string(w) + " outside (0,1]");
      }
    }
    NodeId a = intern(tokens[0]);
    NodeId b = intern(tokens[1]);
    raw.push_back({a, b, weight});
  }
  if (data_lines == 0) throw ParseError(report.lines, "empty edge list");

  const NodeId n = static_cast<NodeId>(labels.size());
  std::vector<NodeId> remap(n);
  std::iota(remap.begin(), remap.end(), 0);
  std::vector<std::optional<std::uint64_t>> numeric(n);
  bool all_numeric = true;
  for (NodeId i = 0; i < n && all_numeric; ++i) {
    numeric[i] = as_unsigned(labels[i]);
    all_numeric = numeric[i].has_value();
  }
  if (all_numeric) {
    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](NodeId x, NodeId y) {
      if (*numeric[x] != *numeric[y]) return *numeric[x] < *numeric[y];
      return labels[x] < labels[y];
    });
    std::vector<std::string> sorted_labels(n);
    for (NodeId rank = 0; rank < n; ++rank) {
      remap[order[rank]] = rank;
      sorted_labels[rank] = std::move(labels[order[rank]]);
    }
    labels = std::move(sorted_labels);
  }

  std::unordered_set<std::uint64_t> seen;
  seen.reserve(raw.size() * 2);
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const RawEdge& r : raw) {
    NodeId a = remap[r.a];
    NodeId b = remap[r.b];
    if (a == b) {
      ++report.self_loops;
      continue;
    }
    if (a > b) std::swap(a, b);
    const std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | b;
    if (!seen.insert(key).second) {
      ++report.duplicate_edges;
      continue;
    }
    edges.push_back({a, b, r.weight});
  }
  return {Graph(n, std::move(edges), std::move(labels)), report};
}

LoadedGraph load_edge_list(const std::filesystem::path& path, EdgeListFormat format) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return parse_edge_list(in, format);
}

void write_weighted_edge_list(std::ostream& out, const Graph& g) {
  char buffer[64];
  for (const Edge& e : g.edges()) {
    auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), e.weight,
                                   std::chars_format::general, 17);
    out << g.label(e.u) << ' ' << g.label(e.v) << ' '
        << std::string_view(buffer, ptr - buffer) << '\n';
  }
}

}  // namespace edgeblock
