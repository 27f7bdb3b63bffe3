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

// Physical model of a wirelessly powered crowd-sensing round.
//
// The access point beams power P_n to sensor n for T0 seconds; the sensor
// harvests eta * g_n * P_n * T0 joules, keeps q_r joules per sensed bit as its
// reward, and spends the remainder on processing and transmitting the data
// within a window of T seconds:
//
//   time:    l/s + l*C(R)/f + t <= T
//   energy:  (q_r + q_s + q_c*C(R)) * l + (t/g) * f_tx(l/(t*R)) <= eta*g*P*T0
//   power:   sum_n P_n <= P0
//
// with C(R) = e^{eps*R} - e^{eps} compression cycles per bit and
// f_tx(x) = N0 * (2^{x/B} - 1) the transmit power needed for rate x at unit
// gain. The operator's reward is sum_n a_n*log(1 + b_n*l_n) - c*sum_n P_n*T0.

#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace wpcs {

class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public ModelError {
 public:
  using ModelError::ModelError;
};

/// A plan that cannot be executed: zero transmit time with data left to send,
/// or an exponent beyond the representable range.
class InfeasiblePlan : public ModelError {
 public:
  using ModelError::ModelError;
};

/// Largest natural-log exponent the model evaluates; beyond it a quantity is
/// reported as overflowing instead of becoming +inf silently.
inline constexpr double kMaxExponent = 700.0;

struct OperatorConfig {
  double power_budget = 0.1;           // P0 [W]
  double wpt_duration = 1.0;           // T0 [s]
  double sensing_window = 1.0;         // T [s]
  double cost_weight = 0.6;            // c [utility / J]
  double bandwidth = 1.0e4;            // B [Hz]
  double noise_power = 1.0e-9;         // N0 [W]
  double conversion_efficiency = 0.5;  // eta

  void validate() const;
};

struct SensorProfile {
  double channel_gain = 1.0e-5;           // g
  double sensing_rate = 5.0e4;            // s [bit/s]
  double sense_energy_per_bit = 5e-12;    // q_s [J/bit]
  double cycle_energy = 5e-14;            // q_c [J/cycle]
  double reward_energy_per_bit = 5e-12;   // q_r [J/bit]
  double cpu_frequency = 5.0e8;           // f [cycle/s]
  double utility_weight = 0.04;           // a

  void validate() const;
};

enum class CompressionMode { kLossless, kLossy };

struct CompressionModel {
  CompressionMode mode = CompressionMode::kLossless;
  double epsilon = 4.0;
  double ratio_max = 3.0;

  static CompressionModel lossless() { return {CompressionMode::kLossless, 4.0, 3.0}; }
  static CompressionModel lossy() { return {CompressionMode::kLossy, 0.1, 25.0}; }

  /// Utility-equivalent raw bits per sensed bit: 1 (lossless) or 1/sqrt(R).
  double quality(double ratio) const;
  void validate() const;
};

std::string to_string(CompressionMode mode);
CompressionMode parse_mode(const std::string& name);

struct SensorPlan {
  double power = 0.0;        // P [W]
  double data_size = 0.0;    // l_s [bit]
  double ratio = 1.0;        // R
  double tx_duration = 0.0;  // t [s]
};

struct PlanEnergy {
  double reward = 0.0;
  double sensing = 0.0;
  double compression = 0.0;
  double transmission = 0.0;

  double total() const { return reward + sensing + compression + transmission; }
};

struct Solution {
  std::vector<SensorPlan> plans;
  std::vector<bool> selected;
  double dual = 0.0;  // lambda*
  double reward = 0.0;
};

// --- Elementary laws -------------------------------------------------------

/// C(R, eps) = e^{eps R} - e^{eps} CPU cycles per bit. Throws InvalidArgument
/// for R < 1 and InfeasiblePlan when eps*R exceeds kMaxExponent.
double compression_cycles(double ratio, double epsilon);

/// d C / d R = eps e^{eps R}.
double compression_cycles_slope(double ratio, double epsilon);

/// N0 (2^{x/B} - 1). Returns +inf when the exponent exceeds kMaxExponent.
double power_for_rate(double rate, const OperatorConfig& cfg);

/// d/dx of power_for_rate: (N0 ln2 / B) 2^{x/B}; +inf on overflow.
double power_for_rate_slope(double rate, const OperatorConfig& cfg);

// --- Plan-level quantities -------------------------------------------------

double sense_duration(const SensorPlan& plan, const SensorProfile& prof);
double compress_duration(const SensorPlan& plan, const SensorProfile& prof,
                         const CompressionModel& comp);
double compressed_size(const SensorPlan& plan);
double tx_rate(const SensorPlan& plan);
double tx_power(const SensorPlan& plan, const SensorProfile& prof, const OperatorConfig& cfg);

/// Energy split of one plan. E_t = (t/g) f_tx(l/(tR)), zero for an empty plan.
/// Throws InfeasiblePlan for t = 0 with data or for an overflowing rate.
PlanEnergy plan_energy(const SensorPlan& plan, const SensorProfile& prof,
                       const CompressionModel& comp, const OperatorConfig& cfg);

/// Energy the sensor must harvest, expressed as the beam power that delivers
/// it: total / (eta g T0).
double required_power(const PlanEnergy& energy, const SensorProfile& prof,
                      const OperatorConfig& cfg);

double data_utility(const SensorPlan& plan, const SensorProfile& prof,
                    const CompressionModel& comp);

double operator_reward(std::span<const SensorPlan> plans, std::span<const SensorProfile> profiles,
                       const CompressionModel& comp, const OperatorConfig& cfg);

enum class ViolationKind { kPower, kTime, kEnergy, kRatio, kNegative, kOverflow };

struct Violation {
  ViolationKind kind;
  std::ptrdiff_t sensor;  // -1 for system-wide constraints
  double excess;          // relative amount by which the constraint is exceeded
};

std::string to_string(ViolationKind kind);

/// Lists every broken constraint. Inequalities are admitted with relative
/// tolerance `tol`; the boundary itself is feasible.
std::vector<Violation> check_feasibility(std::span<const SensorPlan> plans,
                                         std::span<const SensorProfile> profiles,
                                         const CompressionModel& comp, const OperatorConfig& cfg,
                                         double tol = 1e-9);

}  // namespace wpcs
