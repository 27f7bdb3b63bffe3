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

#pragma once

#include <cmath>
#include <concepts>

#include "wpcs/model.hpp"

namespace wpcs {

class DomainError : public ModelError {
 public:
  using ModelError::ModelError;
};

/// Principal branch W0 of the Lambert W function, w e^w = x with w >= -1.
/// Inputs within 1e-12 below -1/e are clamped to the branch point; anything
/// lower throws DomainError.
double lambert_w0(double x);

/// Result of a sign-change search. `value` is the last midpoint; for a
/// bracket without a sign change it is the endpoint the sign points to.
struct BracketedRoot {
  double lo = 0.0;
  double hi = 0.0;
  double value = 0.0;
  double residual = 0.0;
  int iterations = 0;
};

/// Bisection for an increasing function on [lo, hi]: keeps fn(lo) <= 0 and
/// fn(hi) > 0. Stops when hi - lo < width, |fn(mid)| <= residual_tol, or the
/// bracket can no longer be split in double precision.
template <std::invocable<double> Fn>
BracketedRoot bisect_increasing(Fn&& fn, double lo, double hi, double width,
                                double residual_tol = 0.0, int max_iter = 300) {
  BracketedRoot r{lo, hi, 0.5 * (lo + hi), 0.0, 0};
  while (r.iterations < max_iter) {
    const double mid = 0.5 * (r.lo + r.hi);
    if (mid <= r.lo || mid >= r.hi) break;
    const double v = fn(mid);
    ++r.iterations;
    r.value = mid;
    r.residual = v;
    if (std::abs(v) <= residual_tol) break;
    if (v > 0.0) {
      r.hi = mid;
    } else {
      r.lo = mid;
    }
    if (r.hi - r.lo < width) break;
  }
  return r;
}

/// g(x) = f(x) - x f'(x) for the transmit-power law f. Non-positive,
/// strictly decreasing, zero only at x = 0.
double g_fn(double rate, const OperatorConfig& cfg);

/// y(x) = f(x) - (x + 1/(R beta)) f'(x).
double y_fn(double rate, double ratio, double beta, const OperatorConfig& cfg);

}  // namespace wpcs
