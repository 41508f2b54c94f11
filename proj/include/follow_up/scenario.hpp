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

#ifndef FOLLOW_UP__SCENARIO_HPP_
#define FOLLOW_UP__SCENARIO_HPP_

#include "follow_up/kinematics.hpp"
#include "follow_up/random.hpp"
#include "follow_up/sampling.hpp"
#include "follow_up/special_functions.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace follow_up
{

struct Dataset;

/// Every parameter needed to generate a batch of follow-up scenarios.
///
/// Acceleration means are signed braking values (negative); the defaults
/// reproduce the reference parameter set with gamma shape/scale matched to a
/// 0.7 s mean and 0.2 s standard deviation.
struct GenerationConfig
{
  std::uint64_t n_series{100};
  std::uint64_t n_points{16};
  double t0{0.0};
  double dt{0.2};
  double vehicle_length{4.6};
  NormalSpec accel_leader{-8.829, 1.0};
  NormalSpec accel_follower{-8.829, 1.0};
  NormalSpec pos_leader{65.0, 3.0};
  NormalSpec vel_leader{27.78, 1.0};
  NormalSpec pos_follower{0.0, 3.0};
  NormalSpec vel_follower{33.33, 1.0};
  GammaSpec reaction{12.25, 0.2 * 0.2 / 0.7};
  TruncationBounds truncation{0.3, 1.7};
  double a_min{8.829};
  std::uint64_t seed{0};

  bool operator==(const GenerationConfig &) const = default;
};

/// Throws std::invalid_argument naming the offending field.
void validate(const GenerationConfig & cfg);

struct ScenarioParams
{
  VehicleParams leader;
  VehicleParams follower;
  std::uint64_t index{0};

  bool operator==(const ScenarioParams &) const = default;
};

/// Uniform time grid t_j = t0 + j dt shared by all series of a batch.
struct TimeVector
{
  std::vector<double> values;

  std::size_t size() const { return values.size(); }
  double operator[](std::size_t j) const { return values[j]; }
  bool operator==(const TimeVector &) const = default;
};

struct SeriesDiagnostics
{
  bool negative_velocity{false};
  bool initial_overlap{false};

  bool operator==(const SeriesDiagnostics &) const = default;
};

/// One multivariate time series: time plus leader/follower position and velocity.
///
/// `params` is empty for series ingested from a format that does not carry
/// the sampled parameters (CSV).
struct ScenarioSeries
{
  std::uint64_t index{0};
  std::optional<ScenarioParams> params;
  TimeVector times;
  std::vector<double> x_leader;
  std::vector<double> v_leader;
  std::vector<double> x_follower;
  std::vector<double> v_follower;
  SeriesDiagnostics diagnostics;

  std::size_t size() const { return times.size(); }
  bool operator==(const ScenarioSeries &) const = default;
};

/// Thrown by generate_batch when one or more scenarios failed.
class BatchError : public std::runtime_error
{
public:
  BatchError(std::string message, std::vector<std::pair<std::uint64_t, std::string>> failures)
  : std::runtime_error(std::move(message)), failures_(std::move(failures))
  {
  }

  const std::vector<std::pair<std::uint64_t, std::string>> & failures() const { return failures_; }

private:
  std::vector<std::pair<std::uint64_t, std::string>> failures_;
};

TimeVector build_time_vector(std::uint64_t n, double t0, double dt);

/// Draws one scenario's parameters from `rng` in the fixed order
/// a0_L, a0_F, tR_L, tR_F, x0_L, v0_L, x0_F, v0_F.
ScenarioParams sample_scenario_params(RandomSource & rng, const GenerationConfig & cfg);

ScenarioSeries simulate_scenario(
  const ScenarioParams & params, const TimeVector & times, const GapParams & gap);

/// Generates cfg.n_series scenarios, scenario i from stream i of cfg.seed.
///
/// `threads` > 1 splits the work across worker threads; the result does not
/// depend on the thread count.
Dataset generate_batch(const GenerationConfig & cfg, unsigned threads = 1);

}  // namespace follow_up

#endif  // FOLLOW_UP__SCENARIO_HPP_
