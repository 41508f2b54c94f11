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

#include "follow_up/sampling.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace follow_up
{

void validate(const TruncationBounds & bounds)
{
  if (!std::isfinite(bounds.lo) || !std::isfinite(bounds.hi) || !(bounds.lo > 0.0) ||
      !(bounds.lo < bounds.hi)) {
    throw std::invalid_argument("truncation bounds: require 0 < lo < hi");
  }
}

void validate(const NormalSpec & spec)
{
  if (!std::isfinite(spec.mu) || !std::isfinite(spec.sigma) || spec.sigma < 0.0) {
    throw std::invalid_argument("normal spec: require finite mu and sigma >= 0");
  }
}

double sample_normal(RandomSource & rng, const NormalSpec & spec)
{
  validate(spec);
  const auto [u1, u2] = rng.next_uniform_pair();
  if (spec.sigma == 0.0) {
    return spec.mu;
  }
  const double radius = std::sqrt(-2.0 * std::log(u1));
  return spec.mu + spec.sigma * radius * std::cos(2.0 * std::numbers::pi * u2);
}

double sample_reaction_time(
  RandomSource & rng, const GammaSpec & spec, const TruncationBounds & bounds)
{
  validate(spec);
  validate(bounds);
  for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
    const double t = gamma_inv_cdf(rng.next_uniform(), spec);
    if (t >= bounds.lo && t <= bounds.hi) {
      return t;
    }
  }
  throw SamplingError(
    "sample_reaction_time: " + std::to_string(kMaxRejections) +
    " consecutive rejections; gamma spec and truncation bounds are inconsistent");
}

}  // namespace follow_up
