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

#include "wpcs/power_allocation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "wpcs/special.hpp"

namespace wpcs {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Per-sensor rate the duration t implies: compressed bits over t.
double implied_rate(const RatioSensor& s, double window, double t) {
  return (window - t) / (s.ratio * s.beta * t);
}

}  // namespace

FixedRatioInstance FixedRatioInstance::make(std::span<const SensorProfile> profiles,
                                            std::span<const double> ratios,
                                            const CompressionModel& comp,
                                            const OperatorConfig& cfg) {
  if (profiles.size() != ratios.size()) throw InvalidArgument("profiles/ratios size mismatch");
  FixedRatioInstance inst{{}, comp, cfg};
  inst.sensors.reserve(profiles.size());
  for (std::size_t n = 0; n < profiles.size(); ++n) {
    const SensorProfile& p = profiles[n];
    const double cycles = compression_cycles(ratios[n], comp.epsilon);
    RatioSensor s;
    s.profile = p;
    s.ratio = ratios[n];
    s.quality = comp.quality(ratios[n]);
    s.alpha = p.reward_energy_per_bit + p.sense_energy_per_bit + p.cycle_energy * cycles;
    s.beta = 1.0 / p.sensing_rate + cycles / p.cpu_frequency;
    inst.sensors.push_back(s);
  }
  return inst;
}

double priority(const SensorProfile& prof, double ratio, const CompressionModel& comp,
                const OperatorConfig& cfg) {
  const double g = prof.channel_gain;
  const double alpha = prof.reward_energy_per_bit + prof.sense_energy_per_bit +
                       prof.cycle_energy * compression_cycles(ratio, comp.epsilon);
  const double tx = cfg.noise_power * std::numbers::ln2 / (g * cfg.bandwidth * ratio);
  const double kappa =
      prof.utility_weight * comp.quality(ratio) * cfg.conversion_efficiency * g / (alpha + tx);
  return kappa - cfg.cost_weight;
}

double harvest_energy(const FixedRatioInstance& inst, std::size_t n, double t) {
  const RatioSensor& s = inst.sensors[n];
  const double window = inst.cfg.sensing_window;
  if (t >= window) return 0.0;
  const double g = s.profile.channel_gain;
  const double eta = inst.cfg.conversion_efficiency;
  const double tx = power_for_rate(implied_rate(s, window, t), inst.cfg);
  if (!std::isfinite(tx)) return kInf;
  return s.alpha * (window - t) / (eta * s.beta * g) + t / (eta * g * g) * tx;
}

double stationarity(const FixedRatioInstance& inst, std::size_t n, double lambda, double t) {
  const RatioSensor& s = inst.sensors[n];
  const OperatorConfig& cfg = inst.cfg;
  const double window = cfg.sensing_window;
  const double g = s.profile.channel_gain;
  const double b = s.quality;
  const double utility = s.profile.utility_weight * b / (s.beta + b * (window - t));
  const double price = lambda + cfg.cost_weight;
  if (price <= 0.0) return utility;
  const double y = y_fn(implied_rate(s, window, t), s.ratio, s.beta, cfg);
  if (!std::isfinite(y)) return -kInf;
  return utility + price / (cfg.conversion_efficiency * g) * (y / g - s.alpha / s.beta);
}

double min_tx_duration(const FixedRatioInstance& inst, std::size_t n) {
  const RatioSensor& s = inst.sensors[n];
  const double window = inst.cfg.sensing_window;
  const double t_min =
      window * std::numbers::ln2 / (kMaxExponent * inst.cfg.bandwidth * s.ratio * s.beta);
  return std::min(t_min, 0.5 * window);
}

TxDuration solve_tx_duration(const FixedRatioInstance& inst, std::size_t n, double lambda,
                             double tol) {
  const double window = inst.cfg.sensing_window;
  const RatioSensor& s = inst.sensors[n];
  TxDuration out;
  if (!(priority(s.profile, s.ratio, inst.comp, inst.cfg) > lambda)) {
    out.t = window;
    out.regime = TxRegime::kExcluded;
    out.residual = 0.0;
    return out;
  }
  const double lo = min_tx_duration(inst, n);
  // Residual target well inside `tol`; the bracket usually collapses first.
  const BracketedRoot root = bisect_increasing(
      [&](double t) { return stationarity(inst, n, lambda, t); }, lo, window, 0.0, 1e-3 * tol);
  out.t = root.value;
  out.regime = TxRegime::kInterior;
  out.residual = root.residual;
  out.iterations = root.iterations;
  return out;
}

double total_energy(double lambda, const FixedRatioInstance& inst, double tol) {
  double sum = 0.0;
  for (std::size_t n = 0; n < inst.size(); ++n) {
    const TxDuration d = solve_tx_duration(inst, n, lambda, tol);
    if (d.regime == TxRegime::kInterior) sum += harvest_energy(inst, n, d.t);
  }
  return sum;
}

namespace {

struct DualPoint {
  double energy = 0.0;
  std::vector<TxDuration> durations;
};

DualPoint evaluate_dual(double lambda, const FixedRatioInstance& inst, double tol) {
  DualPoint p;
  p.durations.reserve(inst.size());
  for (std::size_t n = 0; n < inst.size(); ++n) {
    p.durations.push_back(solve_tx_duration(inst, n, lambda, tol));
    if (p.durations.back().regime == TxRegime::kInterior) {
      p.energy += harvest_energy(inst, n, p.durations.back().t);
    }
  }
  return p;
}

}  // namespace

DualState solve_dual(const FixedRatioInstance& inst, double tol) {
  const double budget = inst.cfg.power_budget * inst.cfg.wpt_duration;
  DualState state;
  DualPoint at_zero = evaluate_dual(0.0, inst, tol);
  if (at_zero.energy <= budget) {
    state.lambda = 0.0;
    state.total_energy = at_zero.energy;
    state.durations = std::move(at_zero.durations);
    return state;
  }

  double lambda_max = 0.0;
  for (const RatioSensor& s : inst.sensors) {
    lambda_max = std::max(lambda_max, priority(s.profile, s.ratio, inst.comp, inst.cfg));
  }
  lambda_max += 1.0;

  double lo = 0.0;
  double hi = lambda_max;
  double energy_lo = at_zero.energy;
  DualPoint upper = evaluate_dual(hi, inst, tol);  // no sensor active: E = 0
  double energy_hi = upper.energy;
  while (hi - lo >= tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    DualPoint p = evaluate_dual(mid, inst, tol);
    ++state.iterations;
    const double slack = 1e-12 * std::max(energy_lo, 1e-300);
    if (p.energy > energy_lo + slack || p.energy + slack < energy_hi) state.monotone = false;
    if (p.energy < budget) {
      hi = mid;
      energy_hi = p.energy;
      upper = std::move(p);
    } else {
      lo = mid;
      energy_lo = p.energy;
    }
  }
  state.lambda = hi;
  state.total_energy = upper.energy;
  state.durations = std::move(upper.durations);
  return state;
}

std::vector<double> power_allocation(const DualState& dual, const FixedRatioInstance& inst) {
  std::vector<double> power(inst.size(), 0.0);
  for (std::size_t n = 0; n < inst.size(); ++n) {
    if (dual.durations[n].regime != TxRegime::kInterior) continue;
    power[n] = harvest_energy(inst, n, dual.durations[n].t) / inst.cfg.wpt_duration;
  }
  return power;
}

std::vector<double> sensing_data_sizes(const DualState& dual, const FixedRatioInstance& inst) {
  std::vector<double> bits(inst.size(), 0.0);
  for (std::size_t n = 0; n < inst.size(); ++n) {
    if (dual.durations[n].regime != TxRegime::kInterior) continue;
    bits[n] = (inst.cfg.sensing_window - dual.durations[n].t) / inst.sensors[n].beta;
  }
  return bits;
}

std::optional<double> approx_tx_duration(const FixedRatioInstance& inst, std::size_t n,
                                         double lambda) {
  const RatioSensor& s = inst.sensors[n];
  const OperatorConfig& cfg = inst.cfg;
  const double window = cfg.sensing_window;
  const double g = s.profile.channel_gain;
  const double price = lambda + cfg.cost_weight;
  if (!(price > 0.0)) return 0.0;
  // Stationarity with T - t ~ T reads (v - 1) e^{v - 1} = (M - 1) e^{k - 1},
  // v = k T / t, k = ln2 / (B R beta).
  const double k = std::numbers::ln2 / (cfg.bandwidth * s.ratio * s.beta);
  const double m = s.profile.utility_weight * cfg.conversion_efficiency * g * g /
                       (price * cfg.noise_power * (s.beta / s.quality + window)) -
                   g * s.alpha / (cfg.noise_power * s.beta);
  const double arg = (m - 1.0) * std::exp(k - 1.0);
  if (!std::isfinite(arg) || arg < -0.36787944117144233 - 1e-12) return std::nullopt;
  const double theta = lambert_w0(arg);
  if (!(theta > -1.0)) return std::nullopt;
  return window * k / (theta + 1.0);
}

Solution solve_fixed_ratio(const FixedRatioInstance& inst, double tol) {
  const DualState dual = solve_dual(inst, tol);
  const std::vector<double> power = power_allocation(dual, inst);
  const std::vector<double> bits = sensing_data_sizes(dual, inst);
  Solution sol;
  sol.dual = dual.lambda;
  sol.plans.resize(inst.size());
  sol.selected.resize(inst.size());
  std::vector<SensorProfile> profiles;
  profiles.reserve(inst.size());
  for (std::size_t n = 0; n < inst.size(); ++n) {
    const RatioSensor& s = inst.sensors[n];
    sol.plans[n] = SensorPlan{power[n], bits[n], s.ratio, dual.durations[n].t};
    sol.selected[n] = priority(s.profile, s.ratio, inst.comp, inst.cfg) >= dual.lambda;
    profiles.push_back(s.profile);
  }
  sol.reward = operator_reward(sol.plans, profiles, inst.comp, inst.cfg);
  return sol;
}

}  // namespace wpcs
