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

#ifndef FOLLOW_UP__KINEMATICS_HPP_
#define FOLLOW_UP__KINEMATICS_HPP_

namespace follow_up
{

/// Initial conditions and reaction time of one vehicle.
///
/// Acceleration is signed: a negative value means the vehicle brakes once the
/// driver's reaction time has elapsed.
struct VehicleParams
{
  double x0{0.0};  ///< initial position [m]
  double v0{0.0};  ///< initial velocity [m/s]
  double a0{0.0};  ///< acceleration applied after the reaction time [m/s^2]
  double tR{0.0};  ///< driver reaction time [s]

  bool operator==(const VehicleParams &) const = default;
};

struct VehicleState
{
  double t{0.0};
  double x{0.0};
  double v{0.0};

  bool operator==(const VehicleState &) const = default;
};

/// Vehicle length shared by leader and follower.
struct GapParams
{
  double lV{4.6};
};

/// Throws std::invalid_argument if the parameters are non-finite, v0 < 0 or tR < 0.
void validate(const VehicleParams & p);

/// Piecewise velocity: v0 while t <= tR, then v0 + a0 (t - tR).
///
/// No clamping at standstill; the equations are evaluated literally.
double velocity_at(const VehicleParams & p, double t);

/// Piecewise position: x0 + v0 t while t <= tR, then adds a0 (t - tR)^2 / 2.
double position_at(const VehicleParams & p, double t);

VehicleState state_at(const VehicleParams & p, double t);

/// Bumper-to-bumper gap xL - xF - lV. Negative values mean the vehicles overlap.
double effective_distance(double x_leader, double x_follower, const GapParams & gap);

}  // namespace follow_up

#endif  // FOLLOW_UP__KINEMATICS_HPP_
