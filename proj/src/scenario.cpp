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

#include "follow_up/scenario.hpp"

#include "follow_up/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

namespace follow_up
{

namespace
{
void require(bool ok, const std::string & key, const std::string & what)
{
  if (!ok) {
    throw std::invalid_argument("config: " + key + " " + what);
  }
}

void require_normal(const NormalSpec & spec, const std::string & key)
{
  require(std::isfinite(spec.mu), key + "_mean", "must be finite");
  require(std::isfinite(spec.sigma) && spec.sigma >= 0.0, key + "_sd", "must be finite and >= 0");
}
}  // namespace

void validate(const GenerationConfig & cfg)
{
  require(cfg.n_series >= 1, "n_series", "must be >= 1");
  require(cfg.n_points >= 2, "n_points", "must be >= 2");
  require(std::isfinite(cfg.t0) && cfg.t0 >= 0.0, "t0", "must be finite and >= 0");
  require(std::isfinite(cfg.dt) && cfg.dt > 0.0, "dt", "must be finite and > 0");
  require(
    std::isfinite(cfg.vehicle_length) && cfg.vehicle_length > 0.0, "vehicle_length",
    "must be finite and > 0");
  require(std::isfinite(cfg.a_min) && cfg.a_min > 0.0, "a_min", "must be finite and > 0");
  require_normal(cfg.accel_leader, "accel_leader");
  require_normal(cfg.accel_follower, "accel_follower");
  require_normal(cfg.pos_leader, "pos_leader");
  require_normal(cfg.vel_leader, "vel_leader");
  require_normal(cfg.pos_follower, "pos_follower");
  require_normal(cfg.vel_follower, "vel_follower");
  require(
    std::isfinite(cfg.reaction.shape) && cfg.reaction.shape > 0.0, "reaction_shape",
    "must be finite and > 0");
  require(
    std::isfinite(cfg.reaction.scale) && cfg.reaction.scale > 0.0, "reaction_scale",
    "must be finite and > 0");
  require(
    std::isfinite(cfg.truncation.lo) && cfg.truncation.lo > 0.0, "reaction_min",
    "must be finite and > 0");
  require(
    std::isfinite(cfg.truncation.hi) && cfg.truncation.hi > cfg.truncation.lo, "reaction_max",
    "must be finite and > reaction_min");
}

TimeVector build_time_vector(std::uint64_t n, double t0, double dt)
{
  if (n < 2) {
    throw std::invalid_argument("build_time_vector: n must be >= 2");
  }
  if (!std::isfinite(dt) || !(dt > 0.0)) {
    throw std::invalid_argument("build_time_vector: dt must be finite and > 0");
  }
  if (!std::isfinite(t0)) {
    throw std::invalid_argument("build_time_vector: t0 must be finite");
  }
  TimeVector times;
  times.values.resize(n);
  for (std::uint64_t j = 0; j < n; ++j) {
    times.values[j] = t0 + static_cast<double>(j) * dt;
  }
  return times;
}

ScenarioParams sample_scenario_params(RandomSource & rng, const GenerationConfig & cfg)
{
  ScenarioParams params;
  params.index = rng.stream_id();
  params.leader.a0 = sample_normal(rng, cfg.accel_leader);
  params.follower.a0 = sample_normal(rng, cfg.accel_follower);
  params.leader.tR = sample_reaction_time(rng, cfg.reaction, cfg.truncation);
  params.follower.tR = sample_reaction_time(rng, cfg.reaction, cfg.truncation);
  params.leader.x0 = sample_normal(rng, cfg.pos_leader);
  params.leader.v0 = sample_normal(rng, cfg.vel_leader);
  params.follower.x0 = sample_normal(rng, cfg.pos_follower);
  params.follower.v0 = sample_normal(rng, cfg.vel_follower);
  // A sampled negative speed would leave the model's domain; the tails are
  // ~28 sigma out with the defaults, so clamp rather than resample.
  params.leader.v0 = std::max(params.leader.v0, 0.0);
  params.follower.v0 = std::max(params.follower.v0, 0.0);
  return params;
}

ScenarioSeries simulate_scenario(
  const ScenarioParams & params, const TimeVector & times, const GapParams & gap)
{
  validate(params.leader);
  validate(params.follower);
  if (times.size() < 2) {
    throw std::invalid_argument("simulate_scenario: time vector needs at least 2 points");
  }
  if (!std::isfinite(gap.lV) || !(gap.lV > 0.0)) {
    throw std::invalid_argument("simulate_scenario: vehicle length must be > 0");
  }

  ScenarioSeries series;
  series.index = params.index;
  series.params = params;
  series.times = times;
  const std::size_t n = times.size();
  series.x_leader.resize(n);
  series.v_leader.resize(n);
  series.x_follower.resize(n);
  series.v_follower.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double t = times[j];
    series.x_leader[j] = position_at(params.leader, t);
    series.v_leader[j] = velocity_at(params.leader, t);
    series.x_follower[j] = position_at(params.follower, t);
    series.v_follower[j] = velocity_at(params.follower, t);
    if (series.v_leader[j] < 0.0 || series.v_follower[j] < 0.0) {
      series.diagnostics.negative_velocity = true;
    }
  }
  series.diagnostics.initial_overlap =
    effective_distance(series.x_leader.front(), series.x_follower.front(), gap) <= 0.0;
  return series;
}

Dataset generate_batch(const GenerationConfig & cfg, unsigned threads)
{
  validate(cfg);
  const TimeVector times = build_time_vector(cfg.n_points, cfg.t0, cfg.dt);
  const GapParams gap{cfg.vehicle_length};

  Dataset dataset;
  dataset.provenance.config = cfg;
  dataset.series.resize(cfg.n_series);

  std::vector<std::pair<std::uint64_t, std::string>> failures;
  std::mutex failures_mutex;

  auto run_range = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      try {
        RandomSource rng(cfg.seed, i);
        dataset.series[i] = simulate_scenario(sample_scenario_params(rng, cfg), times, gap);
      } catch (const std::exception & e) {
        const std::lock_guard<std::mutex> lock(failures_mutex);
        failures.emplace_back(i, e.what());
      }
    }
  };

  const std::uint64_t workers =
    std::clamp<std::uint64_t>(threads == 0 ? 1 : threads, 1, cfg.n_series);
  if (workers == 1) {
    run_range(0, cfg.n_series);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::uint64_t chunk = (cfg.n_series + workers - 1) / workers;
    for (std::uint64_t w = 0; w < workers; ++w) {
      const std::uint64_t begin = w * chunk;
      const std::uint64_t end = std::min(cfg.n_series, begin + chunk);
      if (begin < end) {
        pool.emplace_back(run_range, begin, end);
      }
    }
    for (auto & worker : pool) {
      worker.join();
    }
  }

  if (!failures.empty()) {
    std::sort(failures.begin(), failures.end());
    std::ostringstream msg;
    msg << "generate_batch: " << failures.size() << " scenario(s) failed";
    for (const auto & [index, what] : failures) {
      msg << "\n  scenario " << index << ": " << what;
    }
    throw BatchError(msg.str(), std::move(failures));
  }
  return dataset;
}

}  // namespace follow_up
