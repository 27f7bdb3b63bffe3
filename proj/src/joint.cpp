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

#include "wpcs/joint.hpp"

#include <cmath>

#include "wpcs/compression.hpp"
#include "wpcs/power_allocation.hpp"

namespace wpcs {
namespace {

struct Candidate {
  Solution solution;
  std::vector<double> utilities;
};

// Second block. A sensor keeps its first-block plan whenever the compression
// solve does not lower its energy, so the power sum never grows.
Candidate compress_block(const Solution& pa, std::span<const SensorProfile> profiles,
                         const CompressionModel& comp, const OperatorConfig& cfg, double tol) {
  const bool lossy = comp.mode == CompressionMode::kLossy;
  Candidate out{pa, {}};
  if (lossy) out.utilities.assign(profiles.size(), 0.0);
  for (std::size_t n = 0; n < profiles.size(); ++n) {
    const SensorPlan& old = pa.plans[n];
    if (!pa.selected[n] || !(old.data_size > 0.0)) continue;
    const SensorProfile& prof = profiles[n];
    const double harvest = cfg.conversion_efficiency * prof.channel_gain * cfg.wpt_duration;
    SensorPlan next = old;
    if (lossy) {
      const double u = comp.quality(old.ratio) * old.data_size;
      out.utilities[n] = u;
      const CompressionChoice c = solve_lossy({prof, u, comp, cfg}, tol);
      next = SensorPlan{c.energy / harvest, c.data_size, c.ratio, c.tx_duration};
    } else {
      const CompressionChoice c = solve_lossless({prof, old.data_size, comp, cfg}, tol);
      next = SensorPlan{c.energy / harvest, old.data_size, c.ratio, c.tx_duration};
    }
    if (std::isfinite(next.power) && next.power <= old.power) out.solution.plans[n] = next;
  }
  out.solution.reward = operator_reward(out.solution.plans, profiles, comp, cfg);
  return out;
}

JointSolution run(std::span<const SensorProfile> profiles, const CompressionModel& comp,
                  const OperatorConfig& cfg, const SolverSettings& settings) {
  cfg.validate();
  comp.validate();
  for (const SensorProfile& p : profiles) p.validate();
  if (settings.max_outer < 1) throw InvalidArgument("max_outer must be >= 1");
  if (!(settings.tol > 0.0)) throw InvalidArgument("tolerance must be > 0");

  std::vector<double> ratios = settings.initial_ratios;
  if (ratios.empty()) ratios.assign(profiles.size(), 1.0);
  if (ratios.size() != profiles.size()) throw InvalidArgument("initial_ratios size mismatch");
  for (double r : ratios) {
    if (!(r >= 1.0 && r <= comp.ratio_max)) throw InvalidArgument("initial ratio out of range");
  }

  JointSolution out;
  out.mode = comp.mode;
  Candidate best;
  double previous = 0.0;
  for (int k = 1; k <= settings.max_outer; ++k) {
    const FixedRatioInstance inst = FixedRatioInstance::make(profiles, ratios, comp, cfg);
    const Solution pa = solve_fixed_ratio(inst, settings.tol);
    if (k == 1) previous = pa.reward;
    Candidate cand = compress_block(pa, profiles, comp, cfg, settings.tol);
    if (k == 1 || cand.solution.reward >= best.solution.reward) best = std::move(cand);
    out.trace.rewards.push_back(best.solution.reward);
    out.trace.iterations = k;
    for (std::size_t n = 0; n < profiles.size(); ++n) ratios[n] = best.solution.plans[n].ratio;
    if (std::abs(best.solution.reward - previous) < settings.tol) {
      out.trace.converged = true;
      break;
    }
    previous = best.solution.reward;
  }
  out.solution = std::move(best.solution);
  out.utilities = std::move(best.utilities);
  out.trace.gaps = trace_gap(out.trace);
  return out;
}

}  // namespace

JointSolution optimize_lossless(std::span<const SensorProfile> profiles,
                                const CompressionModel& comp, const OperatorConfig& cfg,
                                const SolverSettings& settings) {
  if (comp.mode != CompressionMode::kLossless) throw InvalidArgument("expected a lossless model");
  return run(profiles, comp, cfg, settings);
}

JointSolution optimize_lossy(std::span<const SensorProfile> profiles, const CompressionModel& comp,
                             const OperatorConfig& cfg, const SolverSettings& settings) {
  if (comp.mode != CompressionMode::kLossy) throw InvalidArgument("expected a lossy model");
  return run(profiles, comp, cfg, settings);
}

JointSolution optimize(std::span<const SensorProfile> profiles, const CompressionModel& comp,
                       const OperatorConfig& cfg, const SolverSettings& settings) {
  return comp.mode == CompressionMode::kLossy ? optimize_lossy(profiles, comp, cfg, settings)
                                              : optimize_lossless(profiles, comp, cfg, settings);
}

std::vector<double> trace_gap(const IterationTrace& trace) {
  std::vector<double> gaps;
  if (trace.rewards.empty()) return gaps;
  const double final_reward = trace.rewards.back();
  gaps.reserve(trace.rewards.size());
  for (double r : trace.rewards) gaps.push_back(std::abs(r - final_reward));
  return gaps;
}

}  // namespace wpcs
