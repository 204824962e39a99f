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
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "edgeblock/evaluation.h"
#include "edgeblock/generators.h"

namespace edgeblock {
namespace {

std::size_t count_lines(const std::string& s) { return std::count(s.begin(), s.end(), '\n'); }

std::size_t count_of(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

TEST_CASE("containment factor") {
  CHECK(containment_factor(100, 40) == doctest::Approx(60.0));
  CHECK(containment_factor(7.5, 7.5) == 0.0);
  CHECK(containment_factor(3, 2) == doctest::Approx(100.0 / 3.0));
  CHECK_THROWS_AS(containment_factor(0, 0), std::domain_error);
}

TEST_CASE("budgets") {
  auto f = default_budget_fractions();
  REQUIRE(f.size() == 20);
  CHECK(f.front() == doctest::Approx(0.01));
  CHECK(f.back() == doctest::Approx(0.20));
  CHECK(budget_edges(0.07, 100) == 7);
  CHECK(budget_edges(0.01, 88234) == 882);
  CHECK(budget_edges(0.2, 88234) == 17646);
  CHECK(budget_edges(0.0, 50) == 0);
  CHECK(budget_edges(0.5, 3) == 1);
}

TEST_CASE("summarize_report") {
  std::vector<ContainmentRow> rows(2);
  rows[0].cf = 30;
  rows[1].cf = 50;
  rows[1].seed_set = 1;
  auto agg = summarize_report(rows);
  REQUIRE(agg.size() == 1);
  CHECK(agg[0].cf_mean == doctest::Approx(40.0));
  CHECK(agg[0].cf_std == doctest::Approx(14.142135623730951));
  CHECK(agg[0].n_seed_sets == 2);

  auto single = summarize_report(std::span(rows).first(1));
  CHECK(single[0].cf_std == 0.0);

  rows[1].cf = 30;
  CHECK(summarize_report(rows)[0].cf_std == 0.0);
  CHECK_THROWS(summarize_report({}));

  rows[0].valid = false;
  rows[0].cf = std::nan("");
  CHECK(summarize_report(rows)[0].n_seed_sets == 1);
}

TEST_CASE("experiment grid cardinality") {
  Rng gen = make_stream(41, {});
  Graph g = assign_jaccard_weights(planted_partition(2, 10, 0.5, 0.1, gen));
  ExperimentConfig config;
  config.strategies = {StrategyId::kDegree, StrategyId::kRandom};
  config.budget_fractions = {0.05, 0.1, 0.2};
  config.seed_sets = 2;
  config.cascades = 5;
  std::size_t calls = 0;
  ContainmentReport report = run_experiment(g, config, [&](std::size_t done, std::size_t total) {
    CHECK(total == 12);
    CHECK(done == ++calls);
  });
  CHECK(report.rows.size() == 12);
  CHECK(report.aggregates.size() == 6);
  CHECK(calls == 12);
  for (const ContainmentRow& row : report.rows) {
    CHECK(row.cf == doctest::Approx(containment_factor(row.phi_before, row.phi_after)));
  }
  // aggregate mean equals the mean of its detail rows
  for (const AggregateRow& agg : report.aggregates) {
    double sum = 0;
    int n = 0;
    for (const ContainmentRow& row : report.rows) {
      if (row.strategy == agg.strategy && row.budget_pct == agg.budget_pct) {
        sum += row.cf;
        ++n;
      }
    }
    CHECK(std::abs(agg.cf_mean - sum / n) <= 1e-12 * std::max(1.0, std::abs(agg.cf_mean)));
  }
  CHECK(report.aggregates[0].budget_pct == 5.0);
}

TEST_CASE("zero budget gives zero containment") {
  ExperimentConfig config;
  config.strategies = {StrategyId::kRandom};
  config.budget_fractions = {0.0};
  config.seed_fraction = 0.2;
  config.seed_sets = 3;
  ContainmentReport report = run_experiment(path_graph(10), config);
  for (const ContainmentRow& row : report.rows) {
    CHECK(row.cf == 0.0);
    CHECK(row.blocked_edges == 0);
  }
}

TEST_CASE("unit-weight containment is exact and bounded") {
  // unit weights make every cascade deterministic
  ExperimentConfig config;
  config.strategies = {StrategyId::kBetweenness, StrategyId::kDegree};
  config.budget_fractions = {0.1, 0.3, 0.6};
  config.seed_fraction = 0.1;
  config.seed_sets = 4;
  config.cascades = 2;
  Rng gen = make_stream(42, {});
  Graph g = random_connected(20, 10, gen);
  ContainmentReport report = run_experiment(g, config);
  for (const ContainmentRow& row : report.rows) {
    CHECK(row.cf >= 0.0);
    CHECK(row.cf <= 100.0);
    CHECK_FALSE(row.out_of_range);
  }
  // top-k sets are nested across budgets, so cf cannot drop
  for (std::size_t s = 0; s < 2; ++s) {
    for (std::size_t j = 0; j < 4; ++j) {
      double prev = -1;
      for (std::size_t b = 0; b < 3; ++b) {
        const double cf = report.rows[s * 12 + b * 4 + j].cf;
        CHECK(cf >= prev);
        prev = cf;
      }
    }
  }
}

TEST_CASE("experiment output does not depend on threads") {
  Rng gen = make_stream(43, {});
  Graph g = assign_jaccard_weights(planted_partition(3, 12, 0.5, 0.05, gen));
  ExperimentConfig config;
  config.strategies = {StrategyId::kCommunity, StrategyId::kRandom, StrategyId::kPageRank};
  config.budget_fractions = {0.02, 0.1};
  config.seed_sets = 3;
  config.cascades = 7;
  config.threads = 1;
  std::ostringstream a, b;
  write_detail_csv(a, run_experiment(g, config));
  config.threads = 4;
  write_detail_csv(b, run_experiment(g, config));
  CHECK(a.str() == b.str());
  config.common_random_numbers = false;
  std::ostringstream c;
  write_detail_csv(c, run_experiment(g, config));
  CHECK(count_lines(c.str()) == count_lines(a.str()));
}

TEST_CASE("experiment rejects bad configuration") {
  ExperimentConfig config;
  config.strategies = {StrategyId::kDegree};
  config.seed_sets = 0;
  CHECK_THROWS(run_experiment(path_graph(5), config));
  config.seed_sets = 1;
  config.budget_fractions = {1.5};
  CHECK_THROWS(run_experiment(path_graph(5), config));
}

TEST_CASE("csv export and round trip") {
  ContainmentReport empty;
  empty.network = "none";
  std::ostringstream header_only;
  write_summary_csv(header_only, empty);
  CHECK(header_only.str() == std::string(kSummaryCsvHeader) + "\n");

  ContainmentReport report;
  report.network = "toy";
  for (int pct = 1; pct <= 20; ++pct) {
    report.aggregates.push_back({StrategyId::kBetweenness, static_cast<double>(pct),
                                 100.0 / 3.0 + pct * 0.1, 1.0 / 7.0 * pct, 10});
  }
  std::ostringstream out;
  write_summary_csv(out, report);
  CHECK(count_lines(out.str()) == 21);
  std::istringstream in(out.str());
  ContainmentReport back = parse_summary_csv(in);
  CHECK(back.network == "toy");
  REQUIRE(back.aggregates.size() == 20);
  for (std::size_t i = 0; i < 20; ++i) {
    CHECK(back.aggregates[i].strategy == report.aggregates[i].strategy);
    CHECK(back.aggregates[i].budget_pct == report.aggregates[i].budget_pct);
    CHECK(back.aggregates[i].cf_mean == report.aggregates[i].cf_mean);
    CHECK(back.aggregates[i].cf_std == report.aggregates[i].cf_std);
    CHECK(back.aggregates[i].n_seed_sets == 10);
  }

  std::ostringstream svg;
  write_svg_plot(svg, report);
  CHECK(count_of(svg.str(), "<polyline") == 1);
  const std::string s = svg.str();
  const auto start = s.find("points=\"") + 8;
  const std::string points = s.substr(start, s.find('"', start) - start);
  CHECK(std::count(points.begin(), points.end(), ',') == 20);

  report.network = "bad,name";
  std::ostringstream rejected;
  CHECK_THROWS(write_summary_csv(rejected, report));
  std::istringstream garbage("not a header\n");
  CHECK_THROWS(parse_summary_csv(garbage));
}

TEST_CASE("detail csv layout") {
  ExperimentConfig config;
  config.network = "path";
  config.strategies = {StrategyId::kHeaviestWeight};
  config.budget_fractions = {0.5};
  config.seed_sets = 1;
  config.cascades = 1;
  config.seed_fraction = 0.1;
  ContainmentReport report = run_experiment(path_graph(3), config);
  std::ostringstream out;
  write_detail_csv(out, report);
  std::istringstream lines(out.str());
  std::string header, row;
  std::getline(lines, header);
  std::getline(lines, row);
  CHECK(header == kDetailCsvHeader);
  CHECK(row.rfind("path,hwt,50,0,", 0) == 0);
}

}  // namespace
}  // namespace edgeblock
