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

#include "follow_up/special_functions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace follow_up
{

namespace
{
// Stirling series coefficients B_2k / (2k (2k - 1)) for k = 1..7.
constexpr std::array<double, 7> kStirlingCoef{
  1.0 / 12.0,   -1.0 / 360.0,        1.0 / 1260.0,   -1.0 / 1680.0,
  1.0 / 1188.0, -691.0 / 360360.0,   1.0 / 156.0};

// Arguments are shifted up to this value before the asymptotic series is used;
// the first omitted term is then below 1e-19.
constexpr double kStirlingThreshold = 15.0;

constexpr int kMaxIterations = 1000;
constexpr double kEps = 1e-16;
constexpr double kTiny = 1e-300;

void require_positive(double a, const char * what)
{
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw std::invalid_argument(std::string(what) + ": argument must be finite and > 0");
  }
}

double stirling_log_gamma(double z)
{
  const double inv = 1.0 / z;
  const double inv2 = inv * inv;
  double series = 0.0;
  for (auto it = kStirlingCoef.rbegin(); it != kStirlingCoef.rend(); ++it) {
    series = series * inv2 + *it;
  }
  return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * std::numbers::pi) + series * inv;
}

// Shift a below the threshold: Gamma(a) = Gamma(a + n) / (a (a + 1) ... (a + n - 1)).
std::pair<double, double> shift_argument(double a)
{
  double product = 1.0;
  while (a < kStirlingThreshold) {
    product *= a;
    a += 1.0;
  }
  return {a, product};
}

double gamma_series(double a, double x)
{
  double term = 1.0 / a;
  double sum = term;
  for (int n = 1; n < kMaxIterations; ++n) {
    term *= x / (a + n);
    sum += term;
    if (std::abs(term) < std::abs(sum) * kEps) {
      break;
    }
  }
  return sum * std::exp(a * std::log(x) - x - log_gamma(a));
}

double gamma_continued_fraction(double a, double x)
{
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxIterations; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) {
      d = kTiny;
    }
    c = b + an / c;
    if (std::abs(c) < kTiny) {
      c = kTiny;
    }
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kEps) {
      break;
    }
  }
  return std::exp(a * std::log(x) - x - log_gamma(a)) * h;
}

// Density of Gamma(a, 1) at x > 0.
double unit_gamma_pdf(double a, double x)
{
  return std::exp((a - 1.0) * std::log(x) - x - log_gamma(a));
}
}  // namespace

void validate(const GammaSpec & spec)
{
  if (!(spec.shape > 0.0) || !std::isfinite(spec.shape)) {
    throw std::invalid_argument("gamma spec: shape must be finite and > 0");
  }
  if (!(spec.scale > 0.0) || !std::isfinite(spec.scale)) {
    throw std::invalid_argument("gamma spec: scale must be finite and > 0");
  }
}

double gamma_function(double a)
{
  require_positive(a, "gamma_function");
  if (a > 171.7) {
    return std::numeric_limits<double>::infinity();
  }
  const auto [shifted, product] = shift_argument(a);
  return std::exp(stirling_log_gamma(shifted)) / product;
}

double log_gamma(double a)
{
  require_positive(a, "log_gamma");
  const auto [shifted, product] = shift_argument(a);
  return stirling_log_gamma(shifted) - std::log(product);
}

double regularized_gamma_p(double a, double x)
{
  require_positive(a, "regularized_gamma_p");
  if (!(x >= 0.0)) {
    throw std::invalid_argument("regularized_gamma_p: x must be >= 0");
  }
  if (x == 0.0) {
    return 0.0;
  }
  if (std::isinf(x)) {
    return 1.0;
  }
  if (x < a + 1.0) {
    return std::min(1.0, gamma_series(a, x));
  }
  return std::clamp(1.0 - gamma_continued_fraction(a, x), 0.0, 1.0);
}

double regularized_gamma_q(double a, double x)
{
  require_positive(a, "regularized_gamma_q");
  if (!(x >= 0.0)) {
    throw std::invalid_argument("regularized_gamma_q: x must be >= 0");
  }
  if (x == 0.0) {
    return 1.0;
  }
  if (std::isinf(x)) {
    return 0.0;
  }
  if (x < a + 1.0) {
    return std::clamp(1.0 - gamma_series(a, x), 0.0, 1.0);
  }
  return std::min(1.0, gamma_continued_fraction(a, x));
}

double gamma_cdf(double t, const GammaSpec & spec)
{
  validate(spec);
  if (std::isnan(t) || t < 0.0) {
    throw std::invalid_argument("gamma_cdf: t must be >= 0, got " + std::to_string(t));
  }
  return regularized_gamma_p(spec.shape, t / spec.scale);
}

double normal_quantile(double p)
{
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("normal_quantile: p must lie in (0, 1)");
  }
  static constexpr std::array<double, 6> a{-3.969683028665376e+01, 2.209460984245205e+02,
                                           -2.759285104469687e+02, 1.383577518672690e+02,
                                           -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr std::array<double, 5> b{-5.447609879822406e+01, 1.615858368580409e+02,
                                           -1.556989798598866e+02, 6.680131188771972e+01,
                                           -1.328068155288572e+01};
  static constexpr std::array<double, 6> c{-7.784894002430293e-03, -3.223964580411365e-01,
                                           -2.400758277161838e+00, -2.549732539343734e+00,
                                           4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr std::array<double, 4> d{7.784695709041462e-03, 3.224671290700398e-01,
                                           2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double p_low = 0.02425;

  double x;
  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (p <= 1.0 - p_low) {
    const double q = p - 0.5;
    const double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log1p(-p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  // Halley refinement against the exact CDF.
  const double e = 0.5 * std::erfc(-x / std::numbers::sqrt2) - p;
  const double u = e * std::sqrt(2.0 * std::numbers::pi) * std::exp(0.5 * x * x);
  return x - u / (1.0 + 0.5 * x * u);
}

double gamma_inv_cdf(double p, const GammaSpec & spec)
{
  validate(spec);
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("gamma_inv_cdf: p must lie in (0, 1), got " + std::to_string(p));
  }
  const double a = spec.shape;

  // Work in unit scale (x = t / b), rescale at the end.
  double x;
  if (a >= 1.0) {
    const double z = normal_quantile(p);
    const double w = 1.0 / (9.0 * a);
    const double cube = 1.0 - w + z * std::sqrt(w);
    x = cube > 0.0 ? a * cube * cube * cube : std::exp((std::log(p * a) + log_gamma(a)) / a);
  } else {
    // Small-shape asymptote P(a, x) ~ x^a / (a Gamma(a)).
    x = std::exp((std::log(p) + log_gamma(a + 1.0)) / a);
  }
  if (!(x > 0.0) || !std::isfinite(x)) {
    x = a;
  }

  // Bracket [lo, hi] with P(lo) <= p <= P(hi).
  double lo = 0.0;
  double hi = std::max(x, a);
  while (regularized_gamma_p(a, hi) < p) {
    lo = hi;
    hi *= 2.0;
  }
  if (x <= lo || x >= hi) {
    x = 0.5 * (lo + hi);
  }

  for (int iter = 0; iter < 200; ++iter) {
    const double f = regularized_gamma_p(a, x) - p;
    if (f == 0.0) {
      break;
    }
    if (f < 0.0) {
      lo = x;
    } else {
      hi = x;
    }
    const double pdf = unit_gamma_pdf(a, x);
    double next = (pdf > 0.0 && std::isfinite(pdf)) ? x - f / pdf : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) {
      next = 0.5 * (lo + hi);
    }
    const bool converged = std::abs(next - x) <= 4.0 * std::numeric_limits<double>::epsilon() * x;
    x = next;
    if (converged || hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * hi) {
      break;
    }
  }
  return x * spec.scale;
}

}  // namespace follow_up
