// Copyright 2026 The isingbench Authors
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

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "isingbench/knapsack.hpp"
#include "isingbench/metrics.hpp"

namespace isingbench::report {

// Shortest decimal that reads back to the same double.
std::string format_double(double value);

std::string csv_escape(std::string_view field);
std::string xml_escape(std::string_view text);

struct Provenance {
  std::string tool_version;
  std::string command;  // canonical form; no paths that vary between runs
  std::uint64_t seed = 0;
};

// "# key: value" lines prepended to every CSV file.
std::string csv_preamble(const Provenance& p);
nlohmann::json provenance_json(const Provenance& p);

// UTC time in ISO 8601. Honors SOURCE_DATE_EPOCH when set.
std::string utc_timestamp();

// Per-run manifest: provenance plus the raw argv, timestamp and file list.
nlohmann::json manifest(const Provenance& p, const std::vector<std::string>& argv,
                        const std::vector<std::string>& files);

struct BoxSeries {
  std::string label;
  SummaryStats stats;
};

struct BandSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> center;
  std::vector<double> lower;
  std::vector<double> upper;
};

struct LineSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

struct PlotLabels {
  std::string title;
  std::string x_label;
  std::string y_label;
};

std::string svg_boxplot(const std::vector<BoxSeries>& boxes, const PlotLabels& labels,
                        const Provenance& p);
std::string svg_histogram(const Histogram& hist, const PlotLabels& labels, const Provenance& p);
std::string svg_band(const std::vector<BandSeries>& series, const PlotLabels& labels,
                     const Provenance& p);
std::string svg_lines(const std::vector<LineSeries>& series, const PlotLabels& labels,
                      const Provenance& p);

}  // namespace isingbench::report
