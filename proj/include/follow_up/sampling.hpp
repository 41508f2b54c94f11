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

#ifndef FOLLOW_UP__SAMPLING_HPP_
#define FOLLOW_UP__SAMPLING_HPP_

#include "follow_up/random.hpp"
#include "follow_up/special_functions.hpp"

#include <stdexcept>

namespace follow_up
{

/// Closed interval [lo, hi] the reaction time is restricted to.
struct TruncationBounds
{
  double lo{0.3};
  double hi{1.7};

  bool operator==(const TruncationBounds &) const = default;
};

struct NormalSpec
{
  double mu{0.0};
  double sigma{0.0};

  bool operator==(const NormalSpec &) const = default;
};

void validate(const TruncationBounds & bounds);
void validate(const NormalSpec & spec);

/// Thrown when truncated sampling cannot find an admissible value.
class SamplingError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kMaxRejections = 10000;

/// Normal variate via Box-Muller; exactly mu when sigma == 0 (still consumes a draw).
double sample_normal(RandomSource & rng, const NormalSpec & spec);

/// Gamma variate by inversion, redrawn until it falls inside the bounds.
///
/// Throws SamplingError after kMaxRejections consecutive rejections.
double sample_reaction_time(
  RandomSource & rng, const GammaSpec & spec, const TruncationBounds & bounds);

}  // namespace follow_up

#endif  // FOLLOW_UP__SAMPLING_HPP_
