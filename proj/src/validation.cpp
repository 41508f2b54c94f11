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

#include "follow_up/validation.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <string>

namespace follow_up
{

GenerationConfig validation_config()
{
  GenerationConfig cfg;
  cfg.n_series = 1;
  cfg.n_points = 16;
  cfg.t0 = 0.0;
  cfg.dt = 0.2;
  cfg.vehicle_length = 4.6;
  cfg.accel_leader = {-8.829, 0.0};
  cfg.accel_follower = {-8.829, 0.0};
  cfg.pos_leader = {65.0, 0.0};
  cfg.vel_leader = {27.78, 0.0};
  cfg.pos_follower = {0.0, 0.0};
  cfg.vel_follower = {33.33, 0.0};
  cfg.a_min = 8.829;
  return cfg;
}

ScenarioParams validation_params()
{
  ScenarioParams p;
  p.leader = VehicleParams{65.0, 27.78, -8.829, 0.7};
  p.follower = VehicleParams{0.0, 33.33, -8.829, 0.7};
  p.index = 0;
  return p;
}

Dataset validation_dataset()
{
  const GenerationConfig cfg = validation_config();
  Dataset dataset;
  dataset.provenance.config = cfg;
  dataset.series.push_back(simulate_scenario(
    validation_params(), build_time_vector(cfg.n_points, cfg.t0, cfg.dt),
    GapParams{cfg.vehicle_length}));
  evaluate_batch(dataset, cfg.a_min);
  return dataset;
}

ValidationResult run_validation()
{
  ValidationResult result;
  result.dataset = validation_dataset();
  const auto & series = result.dataset.series.front();
  const auto & dss = result.dataset.annotations.front().dss.values;
  result.passed = true;
  for (std::size_t j = 0; j < series.size(); ++j) {
    ValidationRow row;
    row.t = series.times[j];
    row.dss = dss[j].value();
    row.reference = kReferenceDss[j];
    row.checked = j < kReproducibleEntries;
    row.within_tolerance = std::abs(row.dss - row.reference) <= kReferenceTolerance;
    if (row.checked && !row.within_tolerance) {
      result.passed = false;
    }
    result.rows.push_back(row);
  }
  return result;
}

void print_validation(std::ostream & out, const ValidationResult & result)
{
  out << "Validation scenario: x0 = 65 / 0 m, v0 = 27.78 / 33.33 m/s, a0 = -8.829 m/s^2 (both),\n"
      << "tR = 0.7 s (both), lV = 4.6 m, aMin = 8.829 m/s^2, t = 0.0 .. 3.0 s step 0.2 s\n\n";
  out << "   t [s]    DSS [m]   reference [m]   status\n";
  for (const auto & row : result.rows) {
    std::array<char, 128> line{};
    const char * status = row.checked ? (row.within_tolerance ? "ok" : "MISMATCH")
                                      : (row.within_tolerance ? "matches" : "known discrepancy");
    std::snprintf(
      line.data(), line.size(), "%8.1f %10.3f %15.2f   %s\n", row.t, row.dss, row.reference,
      status);
    out << line.data();
  }
  const auto & report = result.dataset.annotations.front().report;
  out << "\ncritical time steps: " << report.critical_times.size();
  if (report.first_critical) {
    out << " (first at " << *report.first_critical << " s)";
  }
  out << '\n';
  out << "\nNote: only t <= 0.6 s is checked (tolerance +/- " << kReferenceTolerance << " m).\n"
      << "After the 0.7 s reaction time both vehicles brake at the same rate, so DSS grows at\n"
      << "aMin * tR = 6.18 m/s; the reference values for t >= 0.8 s decrease instead and\n"
      << "cannot be obtained from the mean parameters. They are reported as a known\n"
      << "discrepancy and are not tuned to match.\n";
  out << "\nvalidation " << (result.passed ? "PASSED" : "FAILED") << '\n';
}

}  // namespace follow_up
