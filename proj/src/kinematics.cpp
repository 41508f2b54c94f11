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

#include "follow_up/kinematics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace follow_up
{

namespace
{
void check_time(double t)
{
  if (!std::isfinite(t) || t < 0.0) {
    throw std::invalid_argument("kinematics: time must be finite and >= 0, got " + std::to_string(t));
  }
}
}  // namespace

void validate(const VehicleParams & p)
{
  if (!std::isfinite(p.x0) || !std::isfinite(p.v0) || !std::isfinite(p.a0) ||
      !std::isfinite(p.tR)) {
    throw std::invalid_argument("kinematics: vehicle parameters must be finite");
  }
  if (p.v0 < 0.0) {
    throw std::invalid_argument("kinematics: initial velocity must be >= 0");
  }
  if (p.tR < 0.0) {
    throw std::invalid_argument("kinematics: reaction time must be >= 0");
  }
}

double velocity_at(const VehicleParams & p, double t)
{
  validate(p);
  check_time(t);
  if (t <= p.tR) {
    return p.v0;
  }
  return p.v0 + p.a0 * (t - p.tR);
}

double position_at(const VehicleParams & p, double t)
{
  validate(p);
  check_time(t);
  if (t <= p.tR) {
    return p.x0 + p.v0 * t;
  }
  const double dt = t - p.tR;
  return p.x0 + p.v0 * t + 0.5 * p.a0 * dt * dt;
}

VehicleState state_at(const VehicleParams & p, double t)
{
  return VehicleState{t, position_at(p, t), velocity_at(p, t)};
}

double effective_distance(double x_leader, double x_follower, const GapParams & gap)
{
  return x_leader - x_follower - gap.lV;
}

}  // namespace follow_up
