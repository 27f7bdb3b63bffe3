// Copyright 2026 The WPCS Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "wpcs/special.hpp"

#include <limits>
#include <numbers>

namespace wpcs {
namespace {

constexpr double kInvE = 0.36787944117144233;  // 1/e
constexpr int kMaxHalleyIterations = 50;

double initial_guess(double x) {
  if (x < -0.32) {
    // Branch-point series in p = sqrt(2 (1 + e x)).
    const double p = std::sqrt(std::max(0.0, 2.0 * (1.0 + std::numbers::e * x)));
    return -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * 11.0 / 72.0));
  }
  if (x < 1.0) return x * (1.0 + x * (-1.0 + x * 1.5));
  if (x < 10.0) return std::log1p(x) * (1.0 - std::log1p(std::log1p(x)) / (2.0 + std::log1p(x)));
  const double l1 = std::log(x);
  const double l2 = std::log(l1);
  return l1 - l2 + l2 / l1;
}

}  // namespace

double lambert_w0(double x) {
  if (std::isnan(x)) return x;
  if (x < -kInvE) {
    if (x < -kInvE - 1e-12) throw DomainError("lambert_w0: argument below -1/e");
    return -1.0;
  }
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return x;
  if (x + kInvE < 1e-13) return -1.0;

  double w = initial_guess(x);
  for (int i = 0; i < kMaxHalleyIterations; ++i) {
    // Halley step on w e^w - x; written with e^{-w} to stay finite for large x.
    const double ew = std::exp(w);
    const double f = w * ew - x;
    const double wp1 = w + 1.0;
    if (wp1 <= 0.0) {
      w = -1.0 + 1e-10;
      continue;
    }
    const double denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
    const double step = f / denom;
    double next = w - step;
    if (next < -1.0) next = 0.5 * (w - 1.0);
    if (std::abs(next - w) <= 4.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(next))) {
      return next;
    }
    w = next;
  }
  return w;
}

double g_fn(double rate, const OperatorConfig& cfg) {
  // N0 [2^{x/B} - 1 - (x ln2/B) 2^{x/B}] = N0 [expm1(u) - u e^u], u = x ln2/B.
  const double u = rate * std::numbers::ln2 / cfg.bandwidth;
  if (u > kMaxExponent) return -std::numeric_limits<double>::infinity();
  if (u < 1e-2) {
    // -sum_{k>=2} (k-1) u^k / k!; the direct form cancels to noise here.
    return -cfg.noise_power * u * u *
           (1.0 / 2.0 + u * (1.0 / 3.0 + u * (1.0 / 8.0 + u * (1.0 / 30.0 + u / 144.0))));
  }
  return cfg.noise_power * (std::expm1(u) - u * std::exp(u));
}

double y_fn(double rate, double ratio, double beta, const OperatorConfig& cfg) {
  return g_fn(rate, cfg) - power_for_rate_slope(rate, cfg) / (ratio * beta);
}

}  // namespace wpcs
