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

#include "edgeblock/evaluation.h"

#include <atomic>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>

#include "edgeblock/cascade.h"
#include "edgeblock/parallel.h"

namespace edgeblock {
namespace {

// Stream coordinate tags.
enum : std::uint64_t { kSeedSetTag = 1, kCascadeTag = 2, kStrategyTag = 3 };

double round_pct(double fraction) { return std::round(fraction * 100.0 * 1e6) / 1e6; }

}  // namespace

double containment_factor(double phi_before, double phi_after) {
  if (!(phi_before > 0.0)) {
    throw std::domain_error("containment factor undefined for phi_before <= 0");
  }
  return 100.0 * (phi_before - phi_after) / phi_before;
}

std::vector<double> default_budget_fractions() {
  std::vector<double> fractions;
  for (int pct = 1; pct <= 20; ++pct) fractions.push_back(pct / 100.0);
  return fractions;
}

std::size_t budget_edges(double fraction, std::size_t edge_count) {
  const double raw = fraction * static_cast<double>(edge_count);
  if (!(raw > 0.0)) return 0;
  return static_cast<std::size_t>(std::floor(raw + 1e-9));
}

ContainmentReport run_experiment(const Graph& g, const ExperimentConfig& config,
                                 const ProgressFn& progress) {
  if (config.seed_sets == 0 || config.cascades == 0) {
    throw std::invalid_argument("seed-set and cascade repetitions must be at least 1");
  }
  for (double f : config.budget_fractions) {
    if (!(f >= 0.0 && f <= 1.0)) throw std::invalid_argument("budget fractions must lie in [0, 1]");
  }
  const std::size_t n_sets = config.seed_sets;
  const std::size_t n_strategies = config.strategies.size();
  const std::size_t n_budgets = config.budget_fractions.size();
  std::vector<std::size_t> budgets;
  for (double f : config.budget_fractions) budgets.push_back(budget_edges(f, g.edge_count()));

  std::vector<SeedSet> seeds(n_sets);
  std::vector<std::uint64_t> cascade_master(n_sets);
  for (std::size_t j = 0; j < n_sets; ++j) {
    Rng rng = make_stream(config.master_seed, {kSeedSetTag, j});
    seeds[j] = sample_seed_set(g, config.seed_fraction, rng);
    cascade_master[j] = derive_seed(config.master_seed, {kCascadeTag, j});
  }

  // blocked[s][j][b]; deterministic strategies store one copy at j = 0
  StrategyParams params = config.strategy_params;
  params.threads = config.threads;
  params.sweep.threads = config.threads;
  std::vector<std::vector<std::vector<std::vector<EdgeId>>>> blocked(n_strategies);
  for (std::size_t s = 0; s < n_strategies; ++s) {
    const StrategyId id = config.strategies[s];
    const std::size_t copies = strategy_is_randomized(id) ? n_sets : 1;
    for (std::size_t j = 0; j < copies; ++j) {
      Rng rng = make_stream(config.master_seed, {kStrategyTag, static_cast<std::uint64_t>(id), j});
      try {
        blocked[s].push_back(select_blocked_edges_budgets(g, id, budgets, rng, params));
      } catch (const std::exception& e) {
        throw std::runtime_error("strategy " + std::string(strategy_name(id)) + ": " + e.what());
      }
    }
  }

  std::vector<double> phi_before(n_sets);
  parallel_for(n_sets, config.threads, [&](std::size_t j, std::size_t) {
    phi_before[j] = estimate_spread(g, seeds[j], config.cascades, cascade_master[j], 1).mean;
  });

  ContainmentReport report;
  report.network = config.network;
  const std::size_t cells = n_strategies * n_budgets * n_sets;
  report.rows.resize(cells);
  std::atomic<std::size_t> done{0};
  std::mutex progress_mutex;
  parallel_for(cells, config.threads, [&](std::size_t cell, std::size_t) {
    const std::size_t s = cell / (n_budgets * n_sets);
    const std::size_t b = cell / n_sets % n_budgets;
    const std::size_t j = cell % n_sets;
    const StrategyId id = config.strategies[s];
    const auto& edges = blocked[s][strategy_is_randomized(id) ? j : 0][b];
    const std::uint64_t master =
        config.common_random_numbers
            ? cascade_master[j]
            : derive_seed(config.master_seed, {kCascadeTag, j, s + 1, b + 1});
    ContainmentRow& row = report.rows[cell];
    row.strategy = id;
    row.budget_pct = round_pct(config.budget_fractions[b]);
    row.blocked_edges = edges.size();
    row.seed_set = j;
    row.phi_before = phi_before[j];
    try {
      const Graph after = remove_edges(g, edges);
      row.phi_after = estimate_spread(after, seeds[j], config.cascades, master, 1).mean;
    } catch (const std::exception& e) {
      throw std::runtime_error("strategy " + std::string(strategy_name(id)) + " at budget " +
                               std::to_string(budgets[b]) + ": " + e.what());
    }
    if (row.phi_before > 0.0) {
      row.cf = containment_factor(row.phi_before, row.phi_after);
      row.out_of_range = row.cf < 0.0 || row.cf > 100.0;
    } else {
      row.valid = false;
      row.cf = std::numeric_limits<double>::quiet_NaN();
    }
    const std::size_t finished = ++done;
    if (progress) {
      std::lock_guard lock(progress_mutex);
      progress(finished, cells);
    }
  });
  report.aggregates = summarize_report(report.rows);
  return report;
}

std::vector<AggregateRow> summarize_report(std::span<const ContainmentRow> rows) {
  if (rows.empty()) throw std::invalid_argument("cannot summarize an empty report");
  std::vector<AggregateRow> aggregates;
  std::vector<std::vector<double>> values;
  std::map<std::pair<int, double>, std::size_t> index;
  for (const ContainmentRow& row : rows) {
    auto key = std::pair(static_cast<int>(row.strategy), row.budget_pct);
    auto [it, inserted] = index.try_emplace(key, aggregates.size());
    if (inserted) {
      aggregates.push_back({row.strategy, row.budget_pct, 0.0, 0.0, 0});
      values.emplace_back();
    }
    if (row.valid) values[it->second].push_back(row.cf);
  }
  for (std::size_t i = 0; i < aggregates.size(); ++i) {
    const auto& v = values[i];
    AggregateRow& agg = aggregates[i];
    agg.n_seed_sets = v.size();
    if (v.empty()) {
      agg.cf_mean = agg.cf_std = std::numeric_limits<double>::quiet_NaN();
      continue;
    }
    double sum = 0.0;
    for (double x : v) sum += x;
    agg.cf_mean = sum / static_cast<double>(v.size());
    if (v.size() > 1) {
      double sq = 0.0;
      for (double x : v) sq += (x - agg.cf_mean) * (x - agg.cf_mean);
      agg.cf_std = std::sqrt(sq / static_cast<double>(v.size() - 1));
    }
  }
  return aggregates;
}

}  // namespace edgeblock
