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

#include "wpcs/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace wpcs {
namespace {

void require(bool ok, const char* what) {
  if (!ok) throw InvalidArgument(what);
}

// True when the plan's side of an inequality exceeds the bound beyond `tol`.
bool exceeds(double value, double bound, double tol) {
  return value > bound + tol * std::max(std::abs(bound), 1e-300);
}

double relative_excess(double value, double bound) {
  return bound > 0.0 ? value / bound - 1.0 : value;
}

}  // namespace

void OperatorConfig::validate() const {
  require(power_budget > 0.0, "power_budget must be > 0");
  require(wpt_duration > 0.0, "wpt_duration must be > 0");
  require(sensing_window > 0.0, "sensing_window must be > 0");
  require(cost_weight >= 0.0, "cost_weight must be >= 0");
  require(bandwidth > 0.0, "bandwidth must be > 0");
  require(noise_power > 0.0, "noise_power must be > 0");
  require(conversion_efficiency > 0.0 && conversion_efficiency < 1.0,
          "conversion_efficiency must lie in (0, 1)");
}

void SensorProfile::validate() const {
  require(channel_gain > 0.0, "channel_gain must be > 0");
  require(sensing_rate > 0.0, "sensing_rate must be > 0");
  require(sense_energy_per_bit > 0.0, "sense_energy_per_bit must be > 0");
  require(cycle_energy > 0.0, "cycle_energy must be > 0");
  require(reward_energy_per_bit > 0.0, "reward_energy_per_bit must be > 0");
  require(cpu_frequency > 0.0, "cpu_frequency must be > 0");
  require(utility_weight > 0.0, "utility_weight must be > 0");
}

double CompressionModel::quality(double ratio) const {
  if (mode == CompressionMode::kLossless) return 1.0;
  return 1.0 / std::sqrt(ratio);
}

void CompressionModel::validate() const {
  require(epsilon > 0.0, "compression epsilon must be > 0");
  require(ratio_max >= 1.0, "ratio_max must be >= 1");
}

std::string to_string(CompressionMode mode) {
  return mode == CompressionMode::kLossless ? "lossless" : "lossy";
}

CompressionMode parse_mode(const std::string& name) {
  if (name == "lossless") return CompressionMode::kLossless;
  if (name == "lossy") return CompressionMode::kLossy;
  throw InvalidArgument("unknown compression mode '" + name + "'");
}

double compression_cycles(double ratio, double epsilon) {
  if (!(ratio >= 1.0)) throw InvalidArgument("compression ratio must be >= 1");
  if (epsilon * ratio > kMaxExponent) throw InfeasiblePlan("compression cycles overflow");
  // e^{eps} (e^{eps (R-1)} - 1) keeps full precision near R = 1.
  return std::exp(epsilon) * std::expm1(epsilon * (ratio - 1.0));
}

double compression_cycles_slope(double ratio, double epsilon) {
  return epsilon * std::exp(epsilon * ratio);
}

double power_for_rate(double rate, const OperatorConfig& cfg) {
  const double exponent = rate * std::numbers::ln2 / cfg.bandwidth;
  if (exponent > kMaxExponent) return std::numeric_limits<double>::infinity();
  return cfg.noise_power * std::expm1(exponent);
}

double power_for_rate_slope(double rate, const OperatorConfig& cfg) {
  const double exponent = rate * std::numbers::ln2 / cfg.bandwidth;
  if (exponent > kMaxExponent) return std::numeric_limits<double>::infinity();
  return cfg.noise_power * std::numbers::ln2 / cfg.bandwidth * std::exp(exponent);
}

double sense_duration(const SensorPlan& plan, const SensorProfile& prof) {
  return plan.data_size / prof.sensing_rate;
}

double compress_duration(const SensorPlan& plan, const SensorProfile& prof,
                         const CompressionModel& comp) {
  return plan.data_size * compression_cycles(plan.ratio, comp.epsilon) / prof.cpu_frequency;
}

double compressed_size(const SensorPlan& plan) { return plan.data_size / plan.ratio; }

double tx_rate(const SensorPlan& plan) {
  if (plan.data_size == 0.0) return 0.0;
  return compressed_size(plan) / plan.tx_duration;
}

double tx_power(const SensorPlan& plan, const SensorProfile& prof, const OperatorConfig& cfg) {
  if (plan.data_size == 0.0) return 0.0;
  return power_for_rate(tx_rate(plan), cfg) / prof.channel_gain;
}

PlanEnergy plan_energy(const SensorPlan& plan, const SensorProfile& prof,
                       const CompressionModel& comp, const OperatorConfig& cfg) {
  PlanEnergy e;
  if (plan.data_size == 0.0) return e;
  if (!(plan.tx_duration > 0.0)) {
    throw InfeasiblePlan("transmission duration is zero but data must be sent");
  }
  const double cycles = compression_cycles(plan.ratio, comp.epsilon);
  e.reward = prof.reward_energy_per_bit * plan.data_size;
  e.sensing = prof.sense_energy_per_bit * plan.data_size;
  e.compression = prof.cycle_energy * plan.data_size * cycles;
  const double p = power_for_rate(tx_rate(plan), cfg);
  if (!std::isfinite(p)) throw InfeasiblePlan("transmission rate overflows");
  e.transmission = plan.tx_duration / prof.channel_gain * p;
  return e;
}

double required_power(const PlanEnergy& energy, const SensorProfile& prof,
                      const OperatorConfig& cfg) {
  return energy.total() / (cfg.conversion_efficiency * prof.channel_gain * cfg.wpt_duration);
}

double data_utility(const SensorPlan& plan, const SensorProfile& prof,
                    const CompressionModel& comp) {
  return prof.utility_weight * std::log1p(comp.quality(plan.ratio) * plan.data_size);
}

double operator_reward(std::span<const SensorPlan> plans, std::span<const SensorProfile> profiles,
                       const CompressionModel& comp, const OperatorConfig& cfg) {
  if (plans.size() != profiles.size()) throw InvalidArgument("plans/profiles size mismatch");
  double utility = 0.0;
  double power = 0.0;
  for (std::size_t n = 0; n < plans.size(); ++n) {
    utility += data_utility(plans[n], profiles[n], comp);
    power += plans[n].power;
  }
  return utility - cfg.cost_weight * power * cfg.wpt_duration;
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kPower: return "power";
    case ViolationKind::kTime: return "time";
    case ViolationKind::kEnergy: return "energy";
    case ViolationKind::kRatio: return "ratio";
    case ViolationKind::kNegative: return "negative";
    case ViolationKind::kOverflow: return "overflow";
  }
  return "unknown";
}

std::vector<Violation> check_feasibility(std::span<const SensorPlan> plans,
                                         std::span<const SensorProfile> profiles,
                                         const CompressionModel& comp, const OperatorConfig& cfg,
                                         double tol) {
  if (plans.size() != profiles.size()) throw InvalidArgument("plans/profiles size mismatch");
  std::vector<Violation> out;
  double total_power = 0.0;
  for (std::size_t i = 0; i < plans.size(); ++i) {
    const auto n = static_cast<std::ptrdiff_t>(i);
    const SensorPlan& plan = plans[i];
    const SensorProfile& prof = profiles[i];
    total_power += plan.power;
    if (plan.power < 0.0 || plan.data_size < 0.0 || plan.tx_duration < 0.0) {
      out.push_back({ViolationKind::kNegative, n, 0.0});
      continue;
    }
    if (plan.ratio < 1.0 || exceeds(plan.ratio, comp.ratio_max, tol)) {
      out.push_back({ViolationKind::kRatio, n, relative_excess(plan.ratio, comp.ratio_max)});
      continue;
    }
    PlanEnergy e;
    double busy = 0.0;
    try {
      e = plan_energy(plan, prof, comp, cfg);
      busy = sense_duration(plan, prof) + compress_duration(plan, prof, comp) + plan.tx_duration;
    } catch (const InfeasiblePlan&) {
      out.push_back({ViolationKind::kOverflow, n, std::numeric_limits<double>::infinity()});
      continue;
    }
    if (exceeds(busy, cfg.sensing_window, tol)) {
      out.push_back({ViolationKind::kTime, n, relative_excess(busy, cfg.sensing_window)});
    }
    const double harvested =
        cfg.conversion_efficiency * prof.channel_gain * plan.power * cfg.wpt_duration;
    if (exceeds(e.total(), harvested, tol)) {
      out.push_back({ViolationKind::kEnergy, n, relative_excess(e.total(), harvested)});
    }
  }
  if (exceeds(total_power, cfg.power_budget, tol)) {
    out.push_back({ViolationKind::kPower, -1, relative_excess(total_power, cfg.power_budget)});
  }
  return out;
}

}  // namespace wpcs
