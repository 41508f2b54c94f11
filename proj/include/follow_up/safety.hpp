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

#ifndef FOLLOW_UP__SAFETY_HPP_
#define FOLLOW_UP__SAFETY_HPP_

#include "follow_up/scenario.hpp"

#include <optional>
#include <span>
#include <vector>

namespace follow_up
{

/// Per-time-step DSS values; std::nullopt marks "undefined" (no braking).
struct DssSeries
{
  std::vector<std::optional<double>> values;
  double a_min{8.829};

  bool operator==(const DssSeries &) const = default;
};

struct CriticalityReport
{
  std::vector<double> critical_times;
  std::optional<double> first_critical;
  bool is_critical{false};

  bool operator==(const CriticalityReport &) const = default;
};

struct SafetyAnnotation
{
  DssSeries dss;
  CriticalityReport report;

  bool operator==(const SafetyAnnotation &) const = default;
};

/// Difference Space Stopping:
///   (xL - xF - lV + vL^2 / (2 aMin)) - (vF tRF + vF^2 / (2 aMin)).
/// Negative values are safety-critical.
double dss_at(
  double x_leader, double x_follower, double v_leader, double v_follower,
  double vehicle_length, double follower_reaction_time, double a_min);

/// Marks every time whose DSS is strictly negative; undefined entries are skipped.
CriticalityReport assess_criticality(
  std::span<const double> times, std::span<const std::optional<double>> dss);

/// DSS and criticality for one series.
///
/// DSS is defined at every time step iff both sampled initial accelerations
/// are negative; otherwise every entry is undefined and the report is empty.
/// Requires sampled parameters (the follower's reaction time enters the metric).
SafetyAnnotation evaluate_series(
  const ScenarioSeries & series, double a_min, double vehicle_length);

/// Attaches a fresh annotation to every series (replacing any existing ones).
void evaluate_batch(Dataset & dataset, double a_min);

}  // namespace follow_up

#endif  // FOLLOW_UP__SAFETY_HPP_
