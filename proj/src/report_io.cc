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
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "edgeblock/evaluation.h"

namespace edgeblock {
namespace {

std::string number(double x) {
  if (std::isnan(x)) return "nan";
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), x);
  return std::string(buffer, ptr);
}

double parse_number(std::string_view field, std::size_t line) {
  if (field == "nan") return std::nan("");
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw std::runtime_error("summary csv line " + std::to_string(line) + ": bad number '" +
                             std::string(field) + "'");
  }
  return value;
}

void check_network_name(const std::string& name) {
  if (name.find_first_of(",\n\r\"") != std::string::npos) {
    throw std::invalid_argument("network name must not contain commas, quotes or newlines");
  }
}

std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    fields.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

// Fixed palette; strategies beyond it cycle.
constexpr std::string_view kColors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                        "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string fixed(double x, int digits = 2) {
  char buffer[64];
  auto [ptr, ec] =
      std::to_chars(buffer, buffer + sizeof(buffer), x, std::chars_format::fixed, digits);
  return std::string(buffer, ptr);
}

}  // namespace

void write_detail_csv(std::ostream& out, const ContainmentReport& report) {
  check_network_name(report.network);
  out << kDetailCsvHeader << '\n';
  for (const ContainmentRow& row : report.rows) {
    out << report.network << ',' << strategy_name(row.strategy) << ',' << number(row.budget_pct)
        << ',' << row.seed_set << ',' << number(row.phi_before) << ',' << number(row.phi_after)
        << ',' << number(row.cf) << '\n';
  }
}

void write_summary_csv(std::ostream& out, const ContainmentReport& report) {
  check_network_name(report.network);
  out << kSummaryCsvHeader << '\n';
  for (const AggregateRow& agg : report.aggregates) {
    out << report.network << ',' << strategy_name(agg.strategy) << ',' << number(agg.budget_pct)
        << ',' << number(agg.cf_mean) << ',' << number(agg.cf_std) << ',' << agg.n_seed_sets
        << '\n';
  }
}

ContainmentReport parse_summary_csv(std::istream& in) {
  ContainmentReport report;
  std::string line;
  if (!std::getline(in, line) || line != kSummaryCsvHeader) {
    throw std::runtime_error("summary csv: missing or unexpected header");
  }
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto fields = split_commas(line);
    if (fields.size() != 6) {
      throw std::runtime_error("summary csv line " + std::to_string(line_no) +
                               ": expected 6 fields");
    }
    report.network = std::string(fields[0]);
    auto strategy = parse_strategy(fields[1]);
    if (!strategy) {
      throw std::runtime_error("summary csv line " + std::to_string(line_no) +
                               ": unknown strategy '" + std::string(fields[1]) + "'");
    }
    AggregateRow agg;
    agg.strategy = *strategy;
    agg.budget_pct = parse_number(fields[2], line_no);
    agg.cf_mean = parse_number(fields[3], line_no);
    agg.cf_std = parse_number(fields[4], line_no);
    agg.n_seed_sets = static_cast<std::size_t>(parse_number(fields[5], line_no));
    report.aggregates.push_back(agg);
  }
  return report;
}

void write_svg_plot(std::ostream& out, const ContainmentReport& report) {
  constexpr double kWidth = 800, kHeight = 500;
  constexpr double kLeft = 70, kRight = 170, kTop = 40, kBottom = 60;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;

  double x_max = 0.0, y_min = 0.0, y_max = 100.0;
  std::vector<StrategyId> order;
  for (const AggregateRow& agg : report.aggregates) {
    if (std::find(order.begin(), order.end(), agg.strategy) == order.end()) {
      order.push_back(agg.strategy);
    }
    x_max = std::max(x_max, agg.budget_pct);
    if (std::isfinite(agg.cf_mean)) {
      y_min = std::min(y_min, agg.cf_mean);
      y_max = std::max(y_max, agg.cf_mean);
    }
  }
  if (x_max <= 0.0) x_max = 1.0;
  auto px = [&](double x) { return kLeft + x / x_max * plot_w; };
  auto py = [&](double y) { return kTop + (y_max - y) / (y_max - y_min) * plot_h; };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">"
      << "Containment factor, " << report.network << "</text>\n";
  out << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + plot_h << "\" x2=\"" << kLeft + plot_w
      << "\" y2=\"" << kTop + plot_h << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\""
      << kTop + plot_h << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 5; ++i) {
    const double x = x_max * i / 5.0;
    const double y = y_min + (y_max - y_min) * i / 5.0;
    out << "<text x=\"" << fixed(px(x)) << "\" y=\"" << kTop + plot_h + 20
        << "\" text-anchor=\"middle\" font-size=\"12\">" << fixed(x, 1) << "</text>\n";
    out << "<text x=\"" << kLeft - 8 << "\" y=\"" << fixed(py(y) + 4)
        << "\" text-anchor=\"end\" font-size=\"12\">" << fixed(y, 1) << "</text>\n";
  }
  out << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 15
      << "\" text-anchor=\"middle\" font-size=\"13\">blocked edges (% of m)</text>\n";
  out << "<text x=\"18\" y=\"" << kTop + plot_h / 2 << "\" text-anchor=\"middle\" font-size=\"13\""
      << " transform=\"rotate(-90 18 " << kTop + plot_h / 2 << ")\">cf (%)</text>\n";

  for (std::size_t s = 0; s < order.size(); ++s) {
    const std::string_view color = kColors[s % std::size(kColors)];
    std::vector<std::pair<double, double>> points;
    for (const AggregateRow& agg : report.aggregates) {
      if (agg.strategy == order[s] && std::isfinite(agg.cf_mean)) {
        points.emplace_back(agg.budget_pct, agg.cf_mean);
      }
    }
    std::sort(points.begin(), points.end());
    out << "<polyline class=\"series\" data-strategy=\"" << strategy_name(order[s])
        << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < points.size(); ++i) {
      out << (i ? " " : "") << fixed(px(points[i].first)) << ',' << fixed(py(points[i].second));
    }
    out << "\"/>\n";
    const double ly = kTop + 20.0 * static_cast<double>(s);
    out << "<line x1=\"" << kLeft + plot_w + 15 << "\" y1=\"" << ly << "\" x2=\""
        << kLeft + plot_w + 40 << "\" y2=\"" << ly << "\" stroke=\"" << color
        << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << kLeft + plot_w + 46 << "\" y=\"" << ly + 4 << "\" font-size=\"12\">"
        << strategy_name(order[s]) << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace edgeblock
