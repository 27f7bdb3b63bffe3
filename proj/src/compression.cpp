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

#include "wpcs/compression.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "wpcs/special.hpp"

namespace wpcs {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// u + e^{-u} - 1, the scaled "-g(x)/f'(x) - f(x)/f'(x) + x" term, without
// the cancellation at small u.
double excess_over_linear(double u) {
  if (u < 1e-2) return u * u * (0.5 - u * (1.0 / 6.0 - u * (1.0 / 24.0 - u / 120.0)));
  return u + std::expm1(-u);
}

// -g(x) / f'(x) = x - f(x)/f'(x) >= 0.
double scaled_neg_g(double rate, const OperatorConfig& cfg) {
  const double u = rate * std::numbers::ln2 / cfg.bandwidth;
  return cfg.bandwidth / std::numbers::ln2 * excess_over_linear(u);
}

// q / f'(x) for a per-bit energy q.
double scaled_energy(double q, double rate, const OperatorConfig& cfg) {
  const double u = rate * std::numbers::ln2 / cfg.bandwidth;
  return q * cfg.bandwidth / (cfg.noise_power * std::numbers::ln2) * std::exp(-u);
}

double rescale(double scaled, double rate, const OperatorConfig& cfg) {
  const double slope = power_for_rate_slope(rate, cfg);
  if (!std::isfinite(slope)) return scaled > 0.0 ? kInf : (scaled < 0.0 ? -kInf : 0.0);
  return scaled * slope;
}

}  // namespace

double LosslessCompressionProblem::slack(double ratio) const {
  return cfg.sensing_window / data_size - 1.0 / profile.sensing_rate -
         compression_cycles(ratio, comp.epsilon) / profile.cpu_frequency;
}

double LossyCompressionProblem::energy_per_bit(double root_ratio) const {
  return profile.reward_energy_per_bit + profile.sense_energy_per_bit +
         profile.cycle_energy * compression_cycles(root_ratio * root_ratio, comp.epsilon);
}

double LossyCompressionProblem::time_per_bit(double root_ratio) const {
  return 1.0 / profile.sensing_rate +
         compression_cycles(root_ratio * root_ratio, comp.epsilon) / profile.cpu_frequency;
}

double LossyCompressionProblem::slack(double root_ratio) const {
  return cfg.sensing_window / data_utility - root_ratio * time_per_bit(root_ratio);
}

CompressionRegion compress_threshold(const SensorProfile& prof, const CompressionModel& comp,
                                     const OperatorConfig& cfg) {
  // At R = 1 compressing pays iff e^u (theta - u) > A + 1, where
  // u = x ln2 / B for the uncompressed rate x = l/(T - l/s),
  // A = q_c g f / N0 and theta = f ln2 / (B eps e^eps) + 1. The left side
  // rises on [0, theta - 1] and falls after, so the set is an interval.
  const double eps = comp.epsilon;
  const double a_plus_1 =
      prof.cycle_energy * prof.channel_gain * prof.cpu_frequency / cfg.noise_power + 1.0;
  const double theta =
      prof.cpu_frequency * std::numbers::ln2 / (cfg.bandwidth * eps * std::exp(eps)) + 1.0;
  const double log_target = std::log(a_plus_1);

  CompressionRegion region;
  const double arg = -std::exp(log_target - theta);
  if (arg < -std::exp(-1.0) - 1e-12) return region;  // never worth compressing

  const auto bits_at = [&](double u) {
    if (u <= 0.0) return 0.0;
    const double rate = u * cfg.bandwidth / std::numbers::ln2;
    return cfg.sensing_window / (1.0 / rate + 1.0 / prof.sensing_rate);
  };

  region.defined = true;
  region.upper_bits = bits_at(theta + lambert_w0(arg));
  if (a_plus_1 > theta) {
    // Rising side in log form: u + log(theta - u) - log(A + 1).
    const BracketedRoot lower = bisect_increasing(
        [&](double u) { return u + std::log(theta - u) - log_target; }, 0.0,
        std::max(0.0, theta - 1.0), 0.0);
    region.lower_bits = bits_at(lower.value);
  }
  return region;
}

double z_fn_scaled(double ratio, const LosslessCompressionProblem& prob) {
  const double d = prob.slack(ratio);
  if (!(d > 0.0)) throw InfeasiblePlan("ratio leaves no time to transmit");
  const SensorProfile& p = prob.profile;
  const double rate = 1.0 / (d * ratio);
  const double g = p.channel_gain;
  return (scaled_energy(p.cycle_energy, rate, prob.cfg) +
          scaled_neg_g(rate, prob.cfg) / (g * p.cpu_frequency)) *
             compression_cycles_slope(ratio, prob.comp.epsilon) -
         1.0 / (g * ratio * ratio);
}

double z_fn(double ratio, const LosslessCompressionProblem& prob) {
  const double scaled = z_fn_scaled(ratio, prob);
  return rescale(scaled, 1.0 / (prob.slack(ratio) * ratio), prob.cfg);
}

double zcheck_fn_scaled(double root_ratio, const LossyCompressionProblem& prob) {
  const double d = prob.slack(root_ratio);
  if (!(d > 0.0)) throw InfeasiblePlan("ratio leaves no time to transmit");
  const SensorProfile& p = prob.profile;
  const double r = root_ratio;
  const double eps = prob.comp.epsilon;
  const double rate = 1.0 / (d * r);
  const double g = p.channel_gain;
  // d/dr of C(r^2) is 2 eps r e^{eps r^2}.
  const double cycles_slope = 2.0 * eps * r * std::exp(eps * r * r);
  const double q = prob.energy_per_bit(r);
  const double q_slope = p.cycle_energy * cycles_slope;
  const double v = prob.time_per_bit(r);
  const double v_slope = cycles_slope / p.cpu_frequency;
  return scaled_energy(r * q_slope + q, rate, prob.cfg) - 1.0 / (g * r * r) +
         scaled_neg_g(rate, prob.cfg) * (v + r * v_slope) / g;
}

double zcheck_fn(double root_ratio, const LossyCompressionProblem& prob) {
  const double scaled = zcheck_fn_scaled(root_ratio, prob);
  return rescale(scaled, 1.0 / (prob.slack(root_ratio) * root_ratio), prob.cfg);
}

namespace {

// Clamped root of an increasing stationarity function on [1, upper], where
// points without transmit time count as positive.
template <typename Slack, typename Scaled>
BracketedRoot ratio_root(Slack&& slack, Scaled&& scaled, double upper, double tol,
                         RatioRegime& regime) {
  const auto sign_fn = [&](double x) { return slack(x) > 0.0 ? scaled(x) : kInf; };
  if (sign_fn(1.0) >= 0.0) {
    regime = RatioRegime::kNoCompression;
    return {1.0, 1.0, 1.0, 0.0, 0};
  }
  if (slack(upper) > 0.0 && sign_fn(upper) <= 0.0) {
    regime = RatioRegime::kAtMaximum;
    return {upper, upper, upper, 0.0, 0};
  }
  regime = RatioRegime::kInterior;
  BracketedRoot root = bisect_increasing(sign_fn, 1.0, upper, tol);
  root.value = 0.5 * (root.lo + root.hi);
  if (!(slack(root.value) > 0.0)) root.value = root.lo;
  return root;
}

}  // namespace

CompressionChoice solve_lossless(const LosslessCompressionProblem& prob, double tol) {
  if (!(prob.data_size > 0.0)) throw InvalidArgument("sensed data size must be > 0");
  if (!(prob.slack(1.0) > 0.0)) throw InfeasiblePlan("data cannot be sensed within the window");
  CompressionChoice out;
  const auto slack = [&](double r) {
    return r * prob.comp.epsilon > kMaxExponent ? -1.0 : prob.slack(r);
  };
  const BracketedRoot root =
      ratio_root(slack, [&](double r) { return z_fn_scaled(r, prob); }, prob.comp.ratio_max, tol,
                 out.regime);
  out.ratio = root.value;
  out.iterations = root.iterations;
  out.data_size = prob.data_size;
  out.tx_duration = prob.data_size * prob.slack(out.ratio);
  out.energy = lossless_energy(prob, out.ratio, out.tx_duration);
  return out;
}

CompressionChoice solve_lossy(const LossyCompressionProblem& prob, double tol) {
  if (!(prob.data_utility > 0.0)) throw InvalidArgument("data utility must be > 0");
  if (!(prob.slack(1.0) > 0.0)) throw InfeasiblePlan("utility cannot be sensed within the window");
  CompressionChoice out;
  const double upper = std::sqrt(prob.comp.ratio_max);
  const auto slack = [&](double r) {
    return r * r * prob.comp.epsilon > kMaxExponent ? -1.0 : prob.slack(r);
  };
  const BracketedRoot root = ratio_root(
      slack, [&](double r) { return zcheck_fn_scaled(r, prob); }, upper, tol, out.regime);
  const double r = root.value;
  out.ratio = r * r;
  out.iterations = root.iterations;
  out.data_size = prob.data_utility * r;
  out.tx_duration = prob.data_utility * prob.slack(r);
  out.energy = lossy_energy(prob, r, out.tx_duration);
  return out;
}

double lossless_energy(const LosslessCompressionProblem& prob, double ratio, double tx_duration) {
  const SensorPlan plan{0.0, prob.data_size, ratio, tx_duration};
  const double busy = sense_duration(plan, prob.profile) +
                      compress_duration(plan, prob.profile, prob.comp) + tx_duration;
  if (busy > prob.cfg.sensing_window * (1.0 + 1e-12)) return kInf;
  try {
    return plan_energy(plan, prob.profile, prob.comp, prob.cfg).total();
  } catch (const InfeasiblePlan&) {
    return kInf;
  }
}

double lossy_energy(const LossyCompressionProblem& prob, double root_ratio, double tx_duration) {
  const SensorPlan plan{0.0, prob.data_utility * root_ratio, root_ratio * root_ratio,
                        tx_duration};
  const double busy = sense_duration(plan, prob.profile) +
                      compress_duration(plan, prob.profile, prob.comp) + tx_duration;
  if (busy > prob.cfg.sensing_window * (1.0 + 1e-12)) return kInf;
  try {
    return plan_energy(plan, prob.profile, prob.comp, prob.cfg).total();
  } catch (const InfeasiblePlan&) {
    return kInf;
  }
}

}  // namespace wpcs
