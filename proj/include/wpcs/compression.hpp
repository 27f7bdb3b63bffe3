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

// Per-sensor compression and transmission with the sensed data fixed.
//
// Lossless: with l_s fixed the sensor minimizes
//   Q(R) l_s + (t/g) f(l_s / (t R)),  Q(R) = q_r + q_s + q_c C(R),
// subject to l_s/s + l_s C(R)/f + t <= T. Transmit energy falls with t, so
// the window is always used in full: t = l_s d(R) with
// d(R) = T/l_s - 1/s - C(R)/f. Along that curve dE/dR = l_s z(R) and z is
// increasing, so R* is the clamped root of z.
//
// Lossy: the delivered utility u = l_s / sqrt(R) is held fixed. In
// r = sqrt(R) the sensed size is u r, the compressed size u / r, and the same
// reasoning gives t = u d(r) and an increasing stationarity function z(r).

#pragma once

#include "wpcs/model.hpp"

namespace wpcs {

struct LosslessCompressionProblem {
  SensorProfile profile;
  double data_size = 0.0;  // l_s [bit]
  CompressionModel comp = CompressionModel::lossless();
  OperatorConfig cfg;

  /// d(R) = transmit seconds per sensed bit left after sensing and compression.
  double slack(double ratio) const;
};

struct LossyCompressionProblem {
  SensorProfile profile;
  double data_utility = 0.0;  // u = b l_s [equivalent raw bit]
  CompressionModel comp = CompressionModel::lossy();
  OperatorConfig cfg;

  /// Per-sensed-bit energy Q(r) = q_r + q_s + q_c C(r^2).
  double energy_per_bit(double root_ratio) const;
  /// Per-sensed-bit busy time V(r) = 1/s + C(r^2)/f.
  double time_per_bit(double root_ratio) const;
  /// d(r) = T/u - r V(r).
  double slack(double root_ratio) const;
};

/// Sensed-data sizes for which compressing (R > 1) lowers a lossless sensor's
/// energy: the open interval (lower_bits, upper_bits). The upper end comes
/// from the principal Lambert W branch; a lower end exists only when the
/// per-cycle energy outweighs the transmit saving at tiny sizes.
struct CompressionRegion {
  bool defined = false;
  double lower_bits = 0.0;
  double upper_bits = 0.0;

  bool contains(double bits) const {
    return defined && bits > lower_bits && bits < upper_bits;
  }
};

CompressionRegion compress_threshold(const SensorProfile& prof, const CompressionModel& comp,
                                     const OperatorConfig& cfg);

/// z(R) = [q_c - g(x)/(g f)] eps e^{eps R} - f'(x)/(g R^2) with x = 1/(d(R) R).
/// Throws InfeasiblePlan if d(R) <= 0; returns +inf when x overflows.
double z_fn(double ratio, const LosslessCompressionProblem& prob);

/// z(R) / f'(x): same sign and root as z_fn, finite wherever d(R) > 0.
double z_fn_scaled(double ratio, const LosslessCompressionProblem& prob);

/// z(r) = r Q'(r) + Q(r) - f'(x)/(g r^2) - g(x) [V(r) + r V'(r)] / g with
/// x = 1/(d(r) r).
double zcheck_fn(double root_ratio, const LossyCompressionProblem& prob);
double zcheck_fn_scaled(double root_ratio, const LossyCompressionProblem& prob);

enum class RatioRegime { kNoCompression, kInterior, kAtMaximum };

struct CompressionChoice {
  double ratio = 1.0;        // R* (lossy: r*^2)
  double data_size = 0.0;    // sensed bits (lossy: u r*)
  double tx_duration = 0.0;  // t*, fills the window
  double energy = 0.0;       // sensor energy at the optimum [J]
  RatioRegime regime = RatioRegime::kNoCompression;
  int iterations = 0;
};

/// Throws InfeasiblePlan when even R = 1 cannot fit the window.
CompressionChoice solve_lossless(const LosslessCompressionProblem& prob, double tol = 1e-5);

/// Throws InfeasiblePlan when r = 1 cannot deliver u inside the window.
CompressionChoice solve_lossy(const LossyCompressionProblem& prob, double tol = 1e-5);

/// Sensor energy of a concrete (ratio, duration) choice for a fixed sensed
/// size; +inf if the choice breaks the window or overflows.
double lossless_energy(const LosslessCompressionProblem& prob, double ratio, double tx_duration);
double lossy_energy(const LossyCompressionProblem& prob, double root_ratio, double tx_duration);

}  // namespace wpcs
