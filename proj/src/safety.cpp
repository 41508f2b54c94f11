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

#include "follow_up/safety.hpp"

#include "follow_up/dataset.hpp"

#include <cmath>
#include <exception>
#include <sstream>
#include <stdexcept>
#include <string>

namespace follow_up
{

double dss_at(
  double x_leader, double x_follower, double v_leader, double v_follower,
  double vehicle_length, double follower_reaction_time, double a_min)
{
  if (!std::isfinite(a_min) || !(a_min > 0.0)) {
    throw std::invalid_argument("dss_at: a_min must be finite and > 0");
  }
  if (!std::isfinite(follower_reaction_time) || follower_reaction_time < 0.0) {
    throw std::invalid_argument("dss_at: follower reaction time must be >= 0");
  }
  const double spacing = (x_leader - x_follower - vehicle_length) +
                         v_leader * v_leader / (2.0 * a_min);
  const double stopping = v_follower * follower_reaction_time +
                          v_follower * v_follower / (2.0 * a_min);
  return spacing - stopping;
}

CriticalityReport assess_criticality(
  std::span<const double> times, std::span<const std::optional<double>> dss)
{
  if (times.size() != dss.size()) {
    throw std::invalid_argument("assess_criticality: times and DSS values are misaligned");
  }
  CriticalityReport report;
  for (std::size_t j = 0; j < times.size(); ++j) {
    if (dss[j] && *dss[j] < 0.0) {
      report.critical_times.push_back(times[j]);
      if (!report.first_critical) {
        report.first_critical = times[j];
      }
    }
  }
  report.is_critical = !report.critical_times.empty();
  return report;
}

SafetyAnnotation evaluate_series(
  const ScenarioSeries & series, double a_min, double vehicle_length)
{
  if (!std::isfinite(a_min) || !(a_min > 0.0)) {
    throw std::invalid_argument("evaluate_series: a_min must be finite and > 0");
  }
  if (!series.params) {
    throw std::invalid_argument(
      "evaluate_series: scenario " + std::to_string(series.index) +
      " has no sampled parameters (reaction time and accelerations are required)");
  }
  const std::size_t n = series.size();
  if (series.x_leader.size() != n || series.v_leader.size() != n ||
      series.x_follower.size() != n || series.v_follower.size() != n) {
    throw std::invalid_argument("evaluate_series: channel lengths differ from the time vector");
  }

  SafetyAnnotation out;
  out.dss.a_min = a_min;
  out.dss.values.assign(n, std::nullopt);

  const ScenarioParams & p = *series.params;
  const bool braking = p.leader.a0 < 0.0 && p.follower.a0 < 0.0;
  if (braking) {
    for (std::size_t j = 0; j < n; ++j) {
      out.dss.values[j] = dss_at(
        series.x_leader[j], series.x_follower[j], series.v_leader[j], series.v_follower[j],
        vehicle_length, p.follower.tR, a_min);
    }
  }
  out.report = assess_criticality(series.times.values, out.dss.values);
  return out;
}

void evaluate_batch(Dataset & dataset, double a_min)
{
  if (dataset.series.empty()) {
    dataset.annotations.clear();
    return;
  }
  if (!dataset.provenance.config) {
    throw std::invalid_argument(
      "evaluate_batch: dataset carries no configuration (vehicle length unknown)");
  }
  const double vehicle_length = dataset.provenance.config->vehicle_length;

  std::vector<SafetyAnnotation> annotations;
  annotations.reserve(dataset.series.size());
  std::ostringstream errors;
  std::size_t n_errors = 0;
  for (const auto & series : dataset.series) {
    try {
      annotations.push_back(evaluate_series(series, a_min, vehicle_length));
    } catch (const std::exception & e) {
      ++n_errors;
      errors << "\n  scenario " << series.index << ": " << e.what();
    }
  }
  if (n_errors > 0) {
    throw std::invalid_argument(
      "evaluate_batch: " + std::to_string(n_errors) + " series failed" + errors.str());
  }
  dataset.annotations = std::move(annotations);
}

}  // namespace follow_up
