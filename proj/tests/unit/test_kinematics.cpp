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

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

using follow_up::effective_distance;
using follow_up::GapParams;
using follow_up::position_at;
using follow_up::VehicleParams;
using follow_up::velocity_at;

namespace
{
const VehicleParams kLeader{65.0, 27.78, -8.829, 0.7};
}

TEST(KinematicsTest, VelocityBeforeReactionIsConstant)
{
  EXPECT_DOUBLE_EQ(velocity_at(kLeader, 0.5), 27.78);
}

TEST(KinematicsTest, VelocityAfterReactionMatchesIntegrator)
{
  const auto ref = follow_up::oracle::integrate_vehicle(65.0, 27.78, -8.829, 0.7, {0.8});
  EXPECT_NEAR(ref[0].v, 26.8971, 1e-6);
  EXPECT_NEAR(velocity_at(kLeader, 0.8), 26.8971, 1e-9);
  EXPECT_NEAR(velocity_at(kLeader, 0.8), ref[0].v, 1e-6);
}

TEST(KinematicsTest, VehicleAtRest)
{
  EXPECT_EQ(velocity_at(VehicleParams{0.0, 0.0, -8.829, 0.0}, 0.0), 0.0);
  EXPECT_EQ(position_at(VehicleParams{0.0, 0.0, 0.0, 0.0}, 5.0), 0.0);
}

TEST(KinematicsTest, PositionLinearPhase)
{
  EXPECT_NEAR(position_at(kLeader, 0.6), 81.668, 1e-12);
}

TEST(KinematicsTest, PositionAfterReactionMatchesIntegrator)
{
  const auto ref = follow_up::oracle::integrate_vehicle(65.0, 27.78, -8.829, 0.7, {0.8});
  EXPECT_NEAR(ref[0].x, 87.17985, 1e-5);
  EXPECT_NEAR(position_at(kLeader, 0.8), 87.17985, 1e-5);
  EXPECT_NEAR(position_at(kLeader, 0.8), ref[0].x, 1e-5);
}

TEST(KinematicsTest, KnotBelongsToConstantVelocityBranch)
{
  const VehicleParams p{0.0, 10.0, -5.0, 1.0};
  EXPECT_EQ(velocity_at(p, 1.0), 10.0);
  EXPECT_EQ(position_at(p, 1.0), 10.0);
}

TEST(KinematicsTest, ContinuousAtReactionTime)
{
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> tr(0.0, 2.0), v(0.0, 40.0), a(-10.0, 3.0);
  for (int k = 0; k < 200; ++k) {
    const VehicleParams p{0.0, v(gen), a(gen), tr(gen) + 1e-3};
    for (const double eps : {1e-3, 1e-6, 1e-9}) {
      EXPECT_LE(std::abs(velocity_at(p, p.tR + eps) - velocity_at(p, p.tR - eps)), 20.0 * eps);
      EXPECT_LE(std::abs(position_at(p, p.tR + eps) - position_at(p, p.tR - eps)), 100.0 * eps);
    }
  }
}

TEST(KinematicsTest, PositionIncrementIsTrapezoidOfVelocity)
{
  std::mt19937_64 gen(12);
  std::uniform_real_distribution<double> tr(0.0, 1.5), v(0.0, 40.0), a(-10.0, 3.0), x(-50, 50);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int k = 0; k < 1000; ++k) {
    const VehicleParams p{x(gen), v(gen), a(gen), tr(gen)};
    const double t1 = p.tR + 3.0 * unit(gen);
    const double t2 = t1 + 3.0 * unit(gen) + 1e-3;
    const double dx = position_at(p, t2) - position_at(p, t1);
    const double trapezoid = 0.5 * (velocity_at(p, t1) + velocity_at(p, t2)) * (t2 - t1);
    EXPECT_NEAR(dx, trapezoid, 1e-9 * std::max(1.0, std::abs(dx)));
  }
}

TEST(KinematicsTest, MatchesBruteForceIntegrator)
{
  std::mt19937_64 gen(13);
  std::uniform_real_distribution<double> tr(0.3, 1.7), v(0.0, 40.0), a(-10.0, 2.0), x(-10, 80);
  std::uniform_real_distribution<double> time(0.0, 3.0);
  for (int k = 0; k < 20; ++k) {
    const VehicleParams p{x(gen), v(gen), a(gen), tr(gen)};
    std::vector<double> times(10);
    std::generate(times.begin(), times.end(), [&] { return time(gen); });
    std::sort(times.begin(), times.end());
    const auto ref = follow_up::oracle::integrate_vehicle(p.x0, p.v0, p.a0, p.tR, times);
    for (std::size_t j = 0; j < times.size(); ++j) {
      EXPECT_NEAR(position_at(p, times[j]), ref[j].x, 1e-5);
      EXPECT_NEAR(velocity_at(p, times[j]), ref[j].v, 1e-6);
    }
  }
}

TEST(KinematicsTest, NoClampingAtStandstill)
{
  const VehicleParams p{0.0, 5.0, -10.0, 0.0};
  EXPECT_DOUBLE_EQ(velocity_at(p, 1.0), -5.0);
  EXPECT_DOUBLE_EQ(position_at(p, 1.0), 0.0);
}

TEST(KinematicsTest, RejectsInvalidInputs)
{
  const double nan = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(velocity_at(kLeader, -0.1), std::invalid_argument);
  EXPECT_THROW(position_at(kLeader, nan), std::invalid_argument);
  EXPECT_THROW(velocity_at(VehicleParams{nan, 1.0, 0.0, 0.5}, 1.0), std::invalid_argument);
  EXPECT_THROW(position_at(VehicleParams{0.0, -1.0, 0.0, 0.5}, 1.0), std::invalid_argument);
  EXPECT_THROW(position_at(VehicleParams{0.0, 1.0, 0.0, -0.5}, 1.0), std::invalid_argument);
}

TEST(EffectiveDistanceTest, Examples)
{
  const GapParams gap{4.6};
  EXPECT_NEAR(effective_distance(65.0, 0.0, gap), 60.4, 1e-12);
  EXPECT_NEAR(effective_distance(10.0, 10.0, gap), -4.6, 1e-12);
  EXPECT_EQ(effective_distance(4.6, 0.0, gap), 0.0);
}

TEST(EffectiveDistanceTest, TranslationInvariant)
{
  std::mt19937_64 gen(14);
  std::uniform_real_distribution<double> pos(-100.0, 100.0), shift(-1e3, 1e3);
  const GapParams gap{4.6};
  for (int k = 0; k < 1000; ++k) {
    const double xl = pos(gen), xf = pos(gen), c = shift(gen);
    EXPECT_NEAR(effective_distance(xl + c, xf + c, gap), effective_distance(xl, xf, gap), 1e-9);
  }
}
