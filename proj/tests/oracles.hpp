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

// Independent reference computations used by the unit and acceptance tests.
// Nothing here calls into the library's kinematics or special functions.

#ifndef FOLLOW_UP_TESTS__ORACLES_HPP_
#define FOLLOW_UP_TESTS__ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

namespace follow_up::oracle
{

struct IntegratedState
{
  double x;
  double v;
};

/// Brute-force stepper for a vehicle that holds v0 until tR and then applies
/// constant acceleration a0. Each step applies a0 for the part of the step that
/// lies after tR and advances position with the trapezoid of velocity.
/// Returns the state at each requested time (times must be ascending).
inline std::vector<IntegratedState> integrate_vehicle(
  double x0, double v0, double a0, double tR, const std::vector<double> & times,
  double step = 1e-6)
{
  std::vector<IntegratedState> out;
  out.reserve(times.size());
  double x = x0;
  double v = v0;
  std::uint64_t k = 0;
  double t = 0.0;
  for (const double target : times) {
    while (t < target) {
      const double t_next = std::min(static_cast<double>(k + 1) * step, target);
      const double h = t_next - t;
      const double active = std::clamp(t_next - std::max(t, tR), 0.0, h);
      const double v_next = v + a0 * active;
      x += 0.5 * (v + v_next) * h;
      v = v_next;
      t = t_next;
      if (t_next == static_cast<double>(k + 1) * step) {
        ++k;
      }
    }
    out.push_back({x, v});
  }
  return out;
}

/// Adaptive Simpson quadrature.
inline double adaptive_simpson(
  const std::function<double(double)> & f, double a, double b, double tol, int depth = 60)
{
  const std::function<double(double, double, double, double, double, double, double, int)> recurse =
    [&](double lo, double hi, double flo, double fmid, double fhi, double whole, double eps,
        int level) -> double {
    const double mid = 0.5 * (lo + hi);
    const double lmid = 0.5 * (lo + mid);
    const double rmid = 0.5 * (mid + hi);
    const double flmid = f(lmid);
    const double frmid = f(rmid);
    const double left = (mid - lo) / 6.0 * (flo + 4.0 * flmid + fmid);
    const double right = (hi - mid) / 6.0 * (fmid + 4.0 * frmid + fhi);
    const double delta = left + right - whole;
    if (level <= 0 || std::abs(delta) <= 15.0 * eps) {
      return left + right + delta / 15.0;
    }
    return recurse(lo, mid, flo, flmid, fmid, left, 0.5 * eps, level - 1) +
           recurse(mid, hi, fmid, frmid, fhi, right, 0.5 * eps, level - 1);
  };
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return recurse(a, b, fa, fm, fb, whole, tol, depth);
}

/// Gamma CDF by quadrature of the density t^(a-1) e^(-t/b) / (b^a Gamma(a)),
/// normalised with std::tgamma. Integrates over the smaller tail.
inline double gamma_cdf_quadrature(double t, double shape, double scale, double tol = 1e-13)
{
  if (t <= 0.0) {
    return 0.0;
  }
  const double log_norm = shape * std::log(scale) + std::lgamma(shape);
  const auto density = [&](double s) {
    if (s <= 0.0) {
      return shape == 1.0 ? std::exp(-log_norm) : 0.0;
    }
    return std::exp((shape - 1.0) * std::log(s) - s / scale - log_norm);
  };
  const double mode = std::max(0.0, (shape - 1.0) * scale);
  if (t <= mode || shape < 1.0) {
    return adaptive_simpson(density, 0.0, t, tol);
  }
  // Upper tail, truncated where the density is negligible.
  const double far = std::max(t, mode) + 80.0 * scale * std::sqrt(shape) + 80.0 * scale;
  const double upper = adaptive_simpson(density, t, far, tol);
  const double lower = adaptive_simpson(density, 0.0, t, tol);
  // Choose the better conditioned of the two routes.
  return (upper < lower) ? 1.0 - upper : lower;
}

/// Inverse of gamma_cdf_quadrature by bisection.
inline double gamma_quantile_bisection(double p, double shape, double scale, double tol = 1e-12)
{
  double lo = 0.0;
  double hi = shape * scale;
  while (gamma_cdf_quadrature(hi, shape, scale) < p) {
    hi *= 2.0;
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (gamma_cdf_quadrature(mid, shape, scale) < p) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace follow_up::oracle

#endif  // FOLLOW_UP_TESTS__ORACLES_HPP_
