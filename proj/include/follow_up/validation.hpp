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

#ifndef FOLLOW_UP__VALIDATION_HPP_
#define FOLLOW_UP__VALIDATION_HPP_

#include "follow_up/dataset.hpp"

#include <array>
#include <cstddef>
#include <ostream>
#include <vector>

namespace follow_up
{

/// Published DSS reference values [m] on the 0.0 .. 3.0 s grid (step 0.2 s).
inline constexpr std::array<double, 16> kReferenceDss{
  17.86, 16.75, 15.64, 14.53, 12.63, 9.98,  7.49,  5.02,
  2.63,  0.40,  -1.80, -3.91, -5.93, -7.83, -9.66, -11.41};

/// Leading entries (t <= 0.6 s) that follow from the mean parameters; the
/// later entries depend on accelerations that were never published.
inline constexpr std::size_t kReproducibleEntries = 4;
inline constexpr double kReferenceTolerance = 0.005;

/// Deterministic validation scenario: mean initial conditions, both vehicles
/// braking at -8.829 m/s^2 after a 0.7 s reaction time, n = 16, dt = 0.2 s.
GenerationConfig validation_config();
ScenarioParams validation_params();

/// The validation scenario as an evaluated single-series dataset.
Dataset validation_dataset();

struct ValidationRow
{
  double t{0.0};
  double dss{0.0};
  double reference{0.0};
  bool checked{false};
  bool within_tolerance{false};
};

struct ValidationResult
{
  Dataset dataset;
  std::vector<ValidationRow> rows;
  bool passed{false};  ///< all checked rows within tolerance
};

ValidationResult run_validation();

void print_validation(std::ostream & out, const ValidationResult & result);

}  // namespace follow_up

#endif  // FOLLOW_UP__VALIDATION_HPP_
