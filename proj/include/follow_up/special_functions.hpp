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

#ifndef FOLLOW_UP__SPECIAL_FUNCTIONS_HPP_
#define FOLLOW_UP__SPECIAL_FUNCTIONS_HPP_

namespace follow_up
{

/// Shape/scale parameters of a gamma distribution (scale in seconds).
struct GammaSpec
{
  double shape{12.25};
  double scale{0.2 * 0.2 / 0.7};

  bool operator==(const GammaSpec &) const = default;
};

void validate(const GammaSpec & spec);

/// Gamma function for a > 0: Stirling series after shifting the argument to >= 15.
double gamma_function(double a);

/// Natural log of the gamma function for a > 0.
double log_gamma(double a);

/// Regularized lower incomplete gamma P(a, x) for a > 0, x >= 0.
///
/// Power series below x = a + 1, Lentz continued fraction for Q above it.
double regularized_gamma_p(double a, double x);

/// Complement Q(a, x) = 1 - P(a, x).
double regularized_gamma_q(double a, double x);

/// Gamma CDF F(t | a, b) = P(a, t / b).
double gamma_cdf(double t, const GammaSpec & spec);

/// Inverse gamma CDF for p in (0, 1).
///
/// Safeguarded Newton on gamma_cdf started from the Wilson-Hilferty
/// approximation; a Newton step that leaves the current bracket is replaced by
/// bisection. Result satisfies |gamma_cdf(t) - p| <= 1e-9.
double gamma_inv_cdf(double p, const GammaSpec & spec);

/// Standard normal quantile (Acklam's rational approximation, one Halley step).
double normal_quantile(double p);

}  // namespace follow_up

#endif  // FOLLOW_UP__SPECIAL_FUNCTIONS_HPP_
