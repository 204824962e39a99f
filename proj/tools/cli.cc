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

#include "cli.h"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "CLI11.hpp"
#include "edgeblock/cascade.h"
#include "edgeblock/evaluation.h"
#include "edgeblock/graph.h"
#include "edgeblock/graph_io.h"
#include "edgeblock/graph_stats.h"
#include "edgeblock/hardness.h"
#include "edgeblock/random.h"
#include "edgeblock/strategies.h"

namespace edgeblock::cli {
namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string graph;
  std::uint64_t seed = kDefaultSeed;
  std::size_t threads = 0;
  std::string weights = "jaccard";
  std::string out;

  // simulate
  std::string seed_nodes;
  double seed_fraction = 0.001;
  std::size_t samples = 1000;
  bool exact = false;

  // block
  std::string strategy;
  std::optional<double> budget_frac;
  std::optional<std::size_t> budget;

  // community sweep
  double resolution = 0.01;
  double factor = 1.05;
  std::size_t h1 = 5;
  std::size_t h2 = 5;
  bool any_inner = false;
  bool weighted_modularity = false;

  // evaluate
  std::string strategies = "rndm,hwt,deg,wdeg,clo,wclo,bet,wbet,pgrk,community";
  std::string budgets = "1..20";
  std::size_t seed_sets = 10;
  std::size_t cascades = 10;
  std::string network;
  bool independent_streams = false;
  bool progress = false;

  // hardness
  std::optional<std::size_t> k;
  std::size_t sweep_all_small = 0;
};

std::string shortest(double x) {
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), x);
  return std::string(buffer, ptr);
}

std::string fixed(double x, int digits) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << x;
  return s.str();
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) {
    if (!part.empty()) parts.push_back(part);
  }
  return parts;
}

Graph load_graph(const Options& opt) {
  Graph g = load_edge_list(opt.graph).graph;
  if (opt.weights == "jaccard") return g.edge_count() ? assign_jaccard_weights(g) : g;
  if (opt.weights == "unit") {
    std::vector<double> ones(g.edge_count(), 1.0);
    return g.with_weights(ones);
  }
  return g;  // "input"
}

std::vector<StrategyId> parse_strategy_list(const std::string& text) {
  std::vector<StrategyId> ids;
  for (const std::string& token : split(text, ',')) {
    auto id = parse_strategy(token);
    if (!id) throw UsageError("unknown strategy '" + token + "'");
    if (std::find(ids.begin(), ids.end(), *id) != ids.end()) {
      throw UsageError("strategy '" + token + "' listed twice");
    }
    ids.push_back(*id);
  }
  if (ids.empty()) throw UsageError("no strategies given");
  return ids;
}

StrategyParams strategy_params(const Options& opt) {
  StrategyParams params;
  params.threads = opt.threads;
  params.sweep.initial_resolution = opt.resolution;
  params.sweep.factor = opt.factor;
  params.sweep.outer_repetitions = opt.h1;
  params.sweep.inner_repetitions = opt.h2;
  params.sweep.count_rule = opt.any_inner ? SweepCountRule::kAnyInner : SweepCountRule::kLastInner;
  params.sweep.weighted = opt.weighted_modularity;
  params.sweep.threads = opt.threads;
  return params;
}

std::ostream& open_output(const std::string& path, std::ofstream& file, std::ostream& fallback) {
  if (path.empty() || path == "-") return fallback;
  file.open(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + path);
  return file;
}

void add_graph_option(CLI::App* app, Options& opt) {
  app->add_option("--graph", opt.graph, "Edge list (u v [w] per line, # or % comments)")
      ->required();
}

void add_seed_options(CLI::App* app, Options& opt) {
  app->add_option("--seed", opt.seed, "Master random seed")->capture_default_str();
  app->add_option("--threads", opt.threads, "Worker threads, 0 = all cores")->capture_default_str();
}

void add_weight_option(CLI::App* app, Options& opt) {
  app->add_option("--weights", opt.weights,
                  "Edge weights: jaccard (recomputed), input (from file) or unit")
      ->check(CLI::IsMember({"jaccard", "input", "unit"}))
      ->capture_default_str();
}

void add_sweep_options(CLI::App* app, Options& opt) {
  app->add_option("--resolution", opt.resolution, "Initial Louvain resolution")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app->add_option("--factor", opt.factor, "Resolution growth factor per step (> 1)")
      ->capture_default_str();
  app->add_option("--h1", opt.h1, "Overshooting steps tolerated before stopping")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app->add_option("--h2", opt.h2, "Louvain runs per resolution step")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app->add_flag("--count-any-inner", opt.any_inner,
                "Count a step as overshooting when any of its runs exceeds the budget");
  app->add_flag("--weighted-modularity", opt.weighted_modularity,
                "Run Louvain on edge weights instead of edge counts");
}

// stats
int run_stats(const Options& opt, std::ostream& out) {
  LoadedGraph loaded = load_edge_list(opt.graph);
  const GraphStats s = graph_stats(loaded.graph, opt.threads);
  out << "nodes           " << s.node_count << '\n'
      << "edges           " << s.edge_count << '\n'
      << "avg_degree      " << fixed(s.average_degree, 3) << '\n'
      << "max_degree      " << s.max_degree << '\n'
      << "diameter        " << s.diameter << (s.connected ? "" : " (largest component)") << '\n'
      << "connected       " << (s.connected ? "yes" : "no") << '\n'
      << "avg_clustering  " << fixed(s.average_clustering, 4) << '\n'
      << "triangles       " << s.triangles << '\n'
      << "duplicate_edges " << loaded.report.duplicate_edges << '\n'
      << "self_loops      " << loaded.report.self_loops << '\n';
  return kExitOk;
}

// weights
int run_weights(const Options& opt, std::ostream& out) {
  Graph g = load_edge_list(opt.graph).graph;
  if (g.edge_count() == 0) throw std::runtime_error("graph has no edges");
  std::ofstream file;
  write_weighted_edge_list(open_output(opt.out, file, out), assign_jaccard_weights(g));
  return kExitOk;
}

SeedSet resolve_seeds(const Graph& g, const Options& opt) {
  if (opt.seed_nodes.empty()) {
    Rng rng = make_stream(opt.seed, {1, 0});
    return sample_seed_set(g, opt.seed_fraction, rng);
  }
  std::unordered_map<std::string, NodeId> by_label;
  for (NodeId v = 0; v < g.node_count(); ++v) by_label.emplace(g.label(v), v);
  std::vector<NodeId> nodes;
  for (const std::string& label : split(opt.seed_nodes, ',')) {
    auto it = by_label.find(label);
    if (it == by_label.end()) throw std::runtime_error("seed node '" + label + "' not in graph");
    nodes.push_back(it->second);
  }
  return SeedSet(std::move(nodes));
}

// simulate
int run_simulate(const Options& opt, std::ostream& out) {
  const Graph g = load_graph(opt);
  const SeedSet seeds = resolve_seeds(g, opt);
  const SpreadEstimate est =
      estimate_spread(g, seeds, opt.samples, derive_seed(opt.seed, {2, 0}), opt.threads);
  out << "seeds      " << seeds.size() << '\n'
      << "samples    " << est.samples << '\n'
      << "phi        " << shortest(est.mean) << '\n'
      << "std_error  " << shortest(est.std_error) << '\n';
  if (opt.exact) {
    if (g.unit_weights()) {
      out << "exact      " << exact_spread_unit_weights(g, seeds) << '\n';
    } else {
      out << "exact      " << shortest(enumerate_spread_exact(g, seeds)) << '\n';
    }
  }
  return kExitOk;
}

// block
int run_block(const Options& opt, std::ostream& out) {
  const Graph g = load_graph(opt);
  const auto id = parse_strategy(opt.strategy);
  if (!id) throw UsageError("unknown strategy '" + opt.strategy + "'");
  std::size_t k = 0;
  if (opt.budget && opt.budget_frac) throw UsageError("give either --budget or --budget-frac");
  if (opt.budget) {
    k = *opt.budget;
  } else if (opt.budget_frac) {
    if (!(*opt.budget_frac >= 0.0 && *opt.budget_frac <= 1.0)) {
      throw UsageError("--budget-frac must lie in [0, 1]");
    }
    k = budget_edges(*opt.budget_frac, g.edge_count());
  } else {
    throw UsageError("one of --budget or --budget-frac is required");
  }
  Rng rng = make_stream(opt.seed, {3, static_cast<std::uint64_t>(*id), 0});
  const auto blocked = select_blocked_edges(g, *id, k, rng, strategy_params(opt));
  std::ofstream file;
  std::ostream& sink = open_output(opt.out, file, out);
  for (EdgeId e : blocked) sink << g.label(g.edge(e).u) << ' ' << g.label(g.edge(e).v) << '\n';
  return kExitOk;
}

// evaluate
int run_evaluate(const Options& opt, std::ostream& out, std::ostream& err) {
  ExperimentConfig config;
  config.strategies = parse_strategy_list(opt.strategies);
  try {
    config.budget_fractions = parse_budget_list(opt.budgets);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const Graph g = load_graph(opt);
  config.network = opt.network.empty() ? std::filesystem::path(opt.graph).stem().string()
                                       : opt.network;
  config.seed_fraction = opt.seed_fraction;
  config.seed_sets = opt.seed_sets;
  config.cascades = opt.cascades;
  config.master_seed = opt.seed;
  config.threads = opt.threads;
  config.common_random_numbers = !opt.independent_streams;
  config.strategy_params = strategy_params(opt);

  ProgressFn progress;
  if (opt.progress) {
    progress = [&err](std::size_t done, std::size_t total) {
      if (done == total || done % 50 == 0) err << "cells " << done << '/' << total << '\n';
    };
  }
  const ContainmentReport report = run_experiment(g, config, progress);

  const std::filesystem::path dir = opt.out.empty() ? "results" : opt.out;
  std::filesystem::create_directories(dir);
  auto write = [&](const char* name, auto&& writer) {
    std::ofstream file(dir / name, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + (dir / name).string());
    writer(file, report);
    out << "wrote " << (dir / name).string() << '\n';
  };
  write("detail.csv", write_detail_csv);
  write("summary.csv", write_summary_csv);
  write("plot.svg", write_svg_plot);
  const auto flagged = std::count_if(report.rows.begin(), report.rows.end(),
                                     [](const ContainmentRow& r) { return r.out_of_range; });
  const auto invalid = std::count_if(report.rows.begin(), report.rows.end(),
                                     [](const ContainmentRow& r) { return !r.valid; });
  if (flagged) out << flagged << " rows with cf outside [0, 100]\n";
  if (invalid) out << invalid << " rows with phi_before = 0\n";
  return kExitOk;
}

void verdict_row(std::ostream& out, const std::string& name, const Graph& h,
                 const ReductionVerdict& v) {
  out << std::left << std::setw(10) << name << std::right << std::setw(3) << h.node_count()
      << std::setw(4) << h.edge_count() << std::setw(4) << v.k << "  " << std::left
      << std::setw(12) << (v.kind == ReductionCase::kBelowGirth ? "girth" : "transformer")
      << std::right << std::setw(6) << (v.girth ? std::to_string(*v.girth) : "inf")
      << std::setw(8) << v.opt_ds << std::setw(8)
      << (v.opt_eb ? std::to_string(*v.opt_eb) : "-") << "  " << (v.pass ? "pass" : "FAIL")
      << '\n';
}

// hardness verify
int run_hardness(const Options& opt, std::ostream& out) {
  if (opt.graph.empty() == (opt.sweep_all_small == 0)) {
    throw UsageError("give exactly one of --graph or --sweep-all-small");
  }
  out << "graph       n   m   k  case         girth  opt_ds  opt_eb  result\n";
  std::size_t passed = 0, total = 0;
  auto check = [&](const std::string& name, const Graph& h, std::size_t k) {
    const ReductionVerdict v = verify_reduction(h, k, opt.threads ? opt.threads : 1);
    verdict_row(out, name, h, v);
    passed += v.pass;
    ++total;
  };
  if (!opt.graph.empty()) {
    const Graph h = load_edge_list(opt.graph).graph;
    const std::string name = std::filesystem::path(opt.graph).stem().string();
    if (opt.k) {
      check(name, h, *opt.k);
    } else {
      for (std::size_t k = 1; k < h.node_count(); ++k) check(name, h, k);
    }
  } else {
    if (opt.sweep_all_small > 6) throw UsageError("--sweep-all-small supports n <= 6");
    for (NodeId n = 2; n <= opt.sweep_all_small; ++n) {
      const auto graphs = connected_graphs_up_to_isomorphism(n);
      for (std::size_t i = 0; i < graphs.size(); ++i) {
        const std::string name = "n" + std::to_string(n) + "#" + std::to_string(i);
        if (opt.k) {
          if (*opt.k >= 1 && *opt.k < n) check(name, graphs[i], *opt.k);
        } else {
          for (std::size_t k = 1; k < n; ++k) check(name, graphs[i], k);
        }
      }
    }
  }
  out << "passed " << passed << '/' << total << '\n';
  return kExitOk;
}

}  // namespace

std::vector<double> parse_budget_list(const std::string& spec) {
  std::vector<double> fractions;
  auto number = [](std::string token, bool& percent) {
    percent = !token.empty() && token.back() == '%';
    if (percent) token.pop_back();
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw std::invalid_argument("bad budget '" + token + "'");
    }
    if (token.find('.') == std::string::npos) percent = true;
    return value;
  };
  std::string text = spec;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    bool pa = false, pb = false;
    std::string hi_token = text.substr(dots + 2);
    const bool percent_suffix = !hi_token.empty() && hi_token.back() == '%';
    if (percent_suffix) hi_token.pop_back();
    const double lo = number(text.substr(0, dots), pa);
    const double hi = number(hi_token, pb);
    const auto ilo = static_cast<long>(lo), ihi = static_cast<long>(hi);
    if (!pa || !pb || ilo != lo || ihi != hi || ilo < 0 || ihi < ilo || ihi > 100) {
      throw std::invalid_argument("budget range must be integer percentages like 1..20");
    }
    for (long p = ilo; p <= ihi; ++p) fractions.push_back(static_cast<double>(p) / 100.0);
    return fractions;
  }
  for (const std::string& token : split(text, ',')) {
    bool percent = false;
    const double value = number(token, percent);
    const double fraction = percent ? value / 100.0 : value;
    if (!(fraction >= 0.0 && fraction <= 1.0)) {
      throw std::invalid_argument("budget '" + token + "' is outside [0, 100%]");
    }
    fractions.push_back(fraction);
  }
  if (fractions.empty()) throw std::invalid_argument("empty budget list");
  return fractions;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Edge blocking experiments on Independent Cascade spread", "edgeblock"};
  app.require_subcommand(1);

  CLI::App* stats = app.add_subcommand("stats", "Structural statistics of a graph");
  add_graph_option(stats, opt);
  stats->add_option("--threads", opt.threads, "Worker threads, 0 = all cores")
      ->capture_default_str();

  CLI::App* weights = app.add_subcommand("weights", "Write the Jaccard-weighted edge list");
  add_graph_option(weights, opt);
  weights->add_option("--out", opt.out, "Output file (stdout when absent)");

  CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo spread estimate");
  add_graph_option(simulate, opt);
  add_weight_option(simulate, opt);
  add_seed_options(simulate, opt);
  simulate->add_option("--seeds", opt.seed_nodes, "Comma-separated seed node labels");
  simulate->add_option("--seed-fraction", opt.seed_fraction,
                       "Seed-set size as a fraction of n when --seeds is absent")
      ->capture_default_str();
  simulate->add_option("--samples", opt.samples, "Cascade replicates")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  simulate->add_flag("--exact", opt.exact, "Also print the exact spread (unit weights or m <= 25)");

  CLI::App* block = app.add_subcommand("block", "Blocked edge set of one strategy");
  add_graph_option(block, opt);
  add_weight_option(block, opt);
  add_seed_options(block, opt);
  block->add_option("--strategy", opt.strategy,
                    "rndm, hwt, deg, wdeg, clo, wclo, bet, wbet, pgrk or community")
      ->required();
  block->add_option("--budget-frac", opt.budget_frac, "Budget as a fraction of m (floored)");
  block->add_option("--budget", opt.budget, "Budget as an edge count");
  block->add_option("--out", opt.out, "Output file (stdout when absent)");
  add_sweep_options(block, opt);

  CLI::App* evaluate = app.add_subcommand("evaluate", "Containment experiment grid");
  add_graph_option(evaluate, opt);
  add_weight_option(evaluate, opt);
  add_seed_options(evaluate, opt);
  evaluate->add_option("--strategies", opt.strategies, "Comma-separated strategy list")
      ->capture_default_str();
  evaluate->add_option("--budgets", opt.budgets,
                       "Integer percentages (1..20 or 1,5,10) or fractions (0.01,0.05)")
      ->capture_default_str();
  evaluate->add_option("--seed-sets", opt.seed_sets, "Random seed sets")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  evaluate->add_option("--cascades", opt.cascades, "Cascade replicates per seed set")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  evaluate->add_option("--seed-fraction", opt.seed_fraction, "Seed-set size as a fraction of n")
      ->capture_default_str();
  evaluate->add_option("--network", opt.network, "Network name in the CSV (default: file stem)");
  evaluate->add_option("--out", opt.out, "Output directory")->default_str("results");
  evaluate->add_flag("--independent-streams", opt.independent_streams,
                     "Use fresh cascade streams after blocking instead of reusing the baseline ones");
  evaluate->add_flag("--progress", opt.progress, "Report finished cells on stderr");
  add_sweep_options(evaluate, opt);

  CLI::App* hardness = app.add_subcommand("hardness", "Exhaustive reduction checks");
  hardness->require_subcommand(1);
  CLI::App* verify = hardness->add_subcommand("verify", "Check the reduction on small graphs");
  verify->add_option("--graph", opt.graph, "Connected graph H");
  verify->add_option("--k", opt.k, "Subset size (default: every k from 1 to n-1)");
  verify->add_option("--sweep-all-small", opt.sweep_all_small,
                     "Check every connected graph with 2..N nodes (N <= 6)");
  verify->add_option("--threads", opt.threads, "Worker threads, 0 = one")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << "usage: edgeblock {stats|weights|simulate|block|evaluate|hardness verify} [options]\n";
    return kExitUsage;
  }

  try {
    if (*stats) return run_stats(opt, out);
    if (*weights) return run_weights(opt, out);
    if (*simulate) return run_simulate(opt, out);
    if (*block) return run_block(opt, out);
    if (*evaluate) return run_evaluate(opt, out, err);
    if (*verify) return run_hardness(opt, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n'
        << "usage: edgeblock {stats|weights|simulate|block|evaluate|hardness verify} [options]\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitUsage;
}

}  // namespace edgeblock::cli
