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

// Containment experiments: strategies x budgets x random seed sets, with the
// containment factor cf = 100 * (phi_before - phi_after) / phi_before.

#ifndef EDGEBLOCK_EVALUATION_H_
#define EDGEBLOCK_EVALUATION_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "edgeblock/graph.h"
#include "edgeblock/random.h"
#include "edgeblock/strategies.h"

namespace edgeblock {

// Throws std::domain_error when phi_before <= 0.
double containment_factor(double phi_before, double phi_after);

// 0.01, 0.02, ..., 0.20
std::vector<double> default_budget_fractions();

// floor(fraction * m), tolerant of representation error in `fraction`.
std::size_t budget_edges(double fraction, std::size_t edge_count);

struct ExperimentConfig {
  std::string network = "graph";
  double seed_fraction = 0.001;
  std::vector<double> budget_fractions = default_budget_fractions();
  std::vector<StrategyId> strategies;
  StrategyParams strategy_params;
  std::size_t seed_sets = 10;
  std::size_t cascades = 10;  // per seed set, before and after blocking
  std::uint64_t master_seed = kDefaultSeed;
  // phi_after replicates reuse the replicate streams of phi_before.
  bool common_random_numbers = true;
  std::size_t threads = 0;
};

struct ContainmentRow {
  StrategyId strategy = StrategyId::kRandom;
  double budget_pct = 0.0;
  std::size_t blocked_edges = 0;
  std::size_t seed_set = 0;
  double phi_before = 0.0;
  double phi_after = 0.0;
  double cf = 0.0;     // NaN when !valid
  bool valid = true;   // false when phi_before == 0
  bool out_of_range = false;  // Monte Carlo noise pushed cf outside [0, 100]
};

struct AggregateRow {
  StrategyId strategy = StrategyId::kRandom;
  double budget_pct = 0.0;
  double cf_mean = 0.0;
  double cf_std = 0.0;  // sample standard deviation, 0 for a single row
  std::size_t n_seed_sets = 0;
};

struct ContainmentReport {
  std::string network;
  std::vector<ContainmentRow> rows;  // ordered by strategy, budget, seed set
  std::vector<AggregateRow> aggregates;
};

// Called after each finished grid cell with (done, total).
using ProgressFn = std::function<void(std::size_t, std::size_t)>;

// Runs the full grid. Seed set j is sampled from stream (master, seed-set, j)
// and its phi_before from cascade master (master, cascade, j). Blocked sets
// are computed on the original graph: once per deterministic strategy, and per
// seed set for randomized ones. Output is identical for any thread count.
ContainmentReport run_experiment(const Graph& g, const ExperimentConfig& config,
                                 const ProgressFn& progress = {});

// Per (strategy, budget) mean and sample std of cf over valid rows, in order
// of first appearance. Throws std::invalid_argument on an empty input.
std::vector<AggregateRow> summarize_report(std::span<const ContainmentRow> rows);

inline constexpr std::string_view kDetailCsvHeader =
    "network,strategy,budget_pct,seed_set_id,phi_before,phi_after,cf";
inline constexpr std::string_view kSummaryCsvHeader =
    "network,strategy,budget_pct,cf_mean,cf_std,n_seed_sets";

// Numbers use the shortest representation that parses back exactly.
void write_detail_csv(std::ostream& out, const ContainmentReport& report);
void write_summary_csv(std::ostream& out, const ContainmentReport& report);
// cf_mean against budget percentage, one polyline per strategy.
void write_svg_plot(std::ostream& out, const ContainmentReport& report);

// Reads a summary CSV back; throws std::runtime_error on malformed input.
ContainmentReport parse_summary_csv(std::istream& in);

}  // namespace edgeblock

#endif  // EDGEBLOCK_EVALUATION_H_
