// Copyright 2026 The follow_up_scenarios Authors
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

#ifndef FOLLOW_UP__ANALYSIS_HPP_
#define FOLLOW_UP__ANALYSIS_HPP_

#include "follow_up/dataset.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace follow_up
{

struct DistributionSummary
{
  std::size_t count{0};
  double mean{0.0};
  double sd{0.0};  ///< sample standard deviation (n - 1)
  double min{0.0};
  double max{0.0};
};

/// Summary of a sample; values are sorted before accumulation so the result
/// does not depend on input order.
DistributionSummary summarize_values(std::vector<double> values);

struct HistogramBin
{
  double start{0.0};
  std::size_t count{0};
};

struct SummaryStats
{
  std::size_t n_series{0};
  std::size_t n_critical{0};
  double critical_fraction{0.0};
  double bin_width{0.0};
  std::vector<HistogramBin> first_critical_histogram;  ///< non-empty bins, ascending
  std::vector<std::optional<double>> min_dss;          ///< per series, dataset order
  std::size_t negative_velocity_series{0};
  DistributionSummary reaction_time;  ///< leader and follower pooled
  DistributionSummary reaction_time_leader;
  DistributionSummary reaction_time_follower;
  DistributionSummary accel_leader;
  DistributionSummary accel_follower;
};

/// Aggregates an evaluated dataset. An empty dataset yields zero counts;
/// a non-empty dataset without annotations is rejected.
SummaryStats summarize(const Dataset & dataset);

/// Aligned text table.
void print_summary(std::ostream & out, const SummaryStats & stats);

/// Same content in `key = value` form.
void print_summary_kv(std::ostream & out, const SummaryStats & stats);

/// Two-panel SVG for one series: positions/velocities on top, effective
/// distance and relative velocity (vF - vL) below. Critical samples are drawn
/// as red circles, each vehicle's reaction time as a vertical line.
std::string render_plot_svg(const Dataset & dataset, std::size_t position);

void emit_plot(const Dataset & dataset, std::size_t position, const std::filesystem::path & path);

}  // namespace follow_up

#endif  // FOLLOW_UP__ANALYSIS_HPP_
