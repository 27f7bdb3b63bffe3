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

// Power allocation, sensing-data sizes and transmission durations for fixed
// compression ratios.
//
// With R_n fixed, every selected sensor uses its whole window
// (beta_n l_n + t_n = T) and spends exactly what it harvests, so the problem
// reduces to choosing t_n. The reduced problem is convex; its partial
// Lagrangian over the power budget decouples per sensor, and the multiplier
// lambda is found by bisection on the total harvested-energy demand E(lambda).
//
// A sensor takes part iff its priority
//   phi_n = a_n b_n eta g_n / (alpha_n + N0 ln2 / (g_n B R_n)) - c
// is at least lambda*; all others get no power and sense nothing.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "wpcs/model.hpp"

namespace wpcs {

struct RatioSensor {
  SensorProfile profile;
  double ratio = 1.0;    // R_n, fixed
  double quality = 1.0;  // b_n at R_n
  double alpha = 0.0;    // q_r + q_s + q_c C(R_n) [J/bit]
  double beta = 0.0;     // 1/s + C(R_n)/f [s/bit]
};

struct FixedRatioInstance {
  std::vector<RatioSensor> sensors;
  CompressionModel comp;
  OperatorConfig cfg;

  static FixedRatioInstance make(std::span<const SensorProfile> profiles,
                                 std::span<const double> ratios, const CompressionModel& comp,
                                 const OperatorConfig& cfg);

  std::size_t size() const { return sensors.size(); }
};

/// Crowd-sensing priority phi = kappa - c of one sensor at ratio R.
double priority(const SensorProfile& prof, double ratio, const CompressionModel& comp,
                const OperatorConfig& cfg);

/// Energy (as P_n T0) sensor n must be sent to sense (T - t)/beta bits and
/// ship them in t seconds. Zero at t = T; +inf when the rate overflows.
double harvest_energy(const FixedRatioInstance& inst, std::size_t n, double t);

/// Derivative of the per-sensor Lagrangian in t_n at multiplier lambda.
/// Increasing in t; its root is the optimal interior transmission duration.
double stationarity(const FixedRatioInstance& inst, std::size_t n, double lambda, double t);

enum class TxRegime { kInterior, kExcluded };

struct TxDuration {
  double t = 0.0;
  TxRegime regime = TxRegime::kExcluded;
  double residual = 0.0;
  int iterations = 0;
};

/// Smallest duration searched for sensor n: below it 2^{x/B} would overflow.
double min_tx_duration(const FixedRatioInstance& inst, std::size_t n);

/// Optimal t_n for a given lambda. Excluded sensors (phi_n < lambda, or a tie)
/// get t = T. `tol` is the stationarity residual accepted before the bracket
/// collapses.
TxDuration solve_tx_duration(const FixedRatioInstance& inst, std::size_t n, double lambda,
                             double tol = 1e-5);

/// E(lambda): total harvested energy demanded when each sensor plays its
/// lambda-optimal duration. Summed in sensor order.
double total_energy(double lambda, const FixedRatioInstance& inst, double tol = 1e-5);

struct DualState {
  double lambda = 0.0;
  double total_energy = 0.0;
  std::vector<TxDuration> durations;
  int iterations = 0;
  /// False if any bisection step observed E(lambda) increasing.
  bool monotone = true;
};

/// lambda* = 0 when E(0) fits the budget, otherwise bisection on
/// [0, max phi + 1] down to a bracket narrower than `tol`. Returns the upper
/// end so the budget always holds.
DualState solve_dual(const FixedRatioInstance& inst, double tol = 1e-5);

std::vector<double> power_allocation(const DualState& dual, const FixedRatioInstance& inst);
std::vector<double> sensing_data_sizes(const DualState& dual, const FixedRatioInstance& inst);

/// Closed-form estimate of t_n valid when t_n << T. Empty when the Lambert W
/// argument falls below -1/e.
std::optional<double> approx_tx_duration(const FixedRatioInstance& inst, std::size_t n,
                                         double lambda);

/// Full solve: dual, then P and l for every sensor packed into plans.
Solution solve_fixed_ratio(const FixedRatioInstance& inst, double tol = 1e-5);

}  // namespace wpcs
