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

#include "wpcs/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

namespace wpcs {
namespace {

double time_per_bit(const SensorProfile& p, double ratio, const CompressionModel& comp) {
  return 1.0 / p.sensing_rate + compression_cycles(ratio, comp.epsilon) / p.cpu_frequency;
}

// Beam power covering the plan, or empty if the plan cannot run.
std::optional<double> covering_power(const SensorPlan& plan, const SensorProfile& prof,
                                     const CompressionModel& comp, const OperatorConfig& cfg) {
  try {
    const double e = plan_energy(plan, prof, comp, cfg).total();
    if (!std::isfinite(e)) return std::nullopt;
    return e / (cfg.conversion_efficiency * prof.channel_gain * cfg.wpt_duration);
  } catch (const InfeasiblePlan&) {
    return std::nullopt;
  }
}

bool fits_window(const SensorPlan& plan, const SensorProfile& prof, const CompressionModel& comp,
                 const OperatorConfig& cfg) {
  const double busy =
      sense_duration(plan, prof) + compress_duration(plan, prof, comp) + plan.tx_duration;
  return busy <= cfg.sensing_window * (1.0 + 1e-12);
}

void require(bool ok, const char* what) {
  if (!ok) throw InvalidArgument(what);
}

// Lexicographic scan of a 2-D grid keeping the first best point.
template <typename Eval>
GridResult scan_2d(const GridSpec& grid, Eval&& eval) {
  grid.validate();
  require(grid.axes.size() == 2, "grid needs exactly two axes");
  const bool maximize = grid.objective == GridObjective::kRewardMax;
  const std::vector<double> xs = grid.axes[0].values();
  const std::vector<double> ys = grid.axes[1].values();
  GridResult best;
  for (double x : xs) {
    for (double y : ys) {
      ++best.evaluated;
      const std::optional<double> v = eval(x, y);
      if (!v) continue;
      ++best.feasible;
      const bool better = best.point.empty() || (maximize ? *v > best.value : *v < best.value);
      if (better) {
        best.point = {x, y};
        best.value = *v;
      }
    }
  }
  return best;
}

std::optional<double> sensor_energy(const SensorPlan& plan, const SensorProfile& prof,
                                    const CompressionModel& comp, const OperatorConfig& cfg) {
  if (plan.ratio < 1.0 || plan.ratio > comp.ratio_max) return std::nullopt;
  if (plan.ratio * comp.epsilon > kMaxExponent) return std::nullopt;
  if (!fits_window(plan, prof, comp, cfg)) return std::nullopt;
  try {
    const double e = plan_energy(plan, prof, comp, cfg).total();
    if (!std::isfinite(e)) return std::nullopt;
    return e;
  } catch (const InfeasiblePlan&) {
    return std::nullopt;
  }
}

}  // namespace

std::vector<double> GridAxis::values() const {
  if (lo == hi) return {lo};
  std::vector<double> v(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    v[static_cast<std::size_t>(i)] =
        i + 1 == points ? hi : lo + (hi - lo) * static_cast<double>(i) / (points - 1);
  }
  return v;
}

void GridSpec::validate() const {
  for (const GridAxis& a : axes) {
    require(a.lo == a.hi || (a.lo < a.hi && a.points >= 2), "grid axis needs lo < hi, points >= 2");
  }
}

GridResult grid_search_p2(std::span<const SensorProfile> profiles, std::span<const double> ratios,
                          const CompressionModel& comp, const OperatorConfig& cfg,
                          const GridSpec& grid) {
  require(profiles.size() <= 2, "grid_search_p2 supports at most two sensors");
  require(profiles.size() == ratios.size(), "profiles/ratios size mismatch");
  require(grid.axes.size() == profiles.size(), "grid_search_p2 needs one axis per sensor");
  require(grid.objective == GridObjective::kRewardMax, "grid_search_p2 maximizes reward");
  grid.validate();
  const std::size_t n_sensors = profiles.size();
  const double window = cfg.sensing_window;
  std::vector<std::vector<double>> ts(n_sensors);
  for (std::size_t n = 0; n < n_sensors; ++n) ts[n] = grid.axes[n].values();

  // Per sensor and grid value: the implied plan, or empty when it cannot run.
  std::vector<std::vector<std::optional<SensorPlan>>> table(n_sensors);
  for (std::size_t n = 0; n < n_sensors; ++n) {
    const double beta = time_per_bit(profiles[n], ratios[n], comp);
    for (double t : ts[n]) {
      std::optional<SensorPlan> entry;
      if (t >= 0.0 && t <= window) {
        SensorPlan plan{0.0, (window - t) / beta, ratios[n], t};
        if (const std::optional<double> p = covering_power(plan, profiles[n], comp, cfg)) {
          plan.power = *p;
          entry = plan;
        }
      }
      table[n].push_back(entry);
    }
  }

  GridResult best;
  best.value = 0.0;  // zero plan
  std::vector<std::size_t> idx(n_sensors, 0);
  std::vector<SensorPlan> plans(n_sensors);
  std::size_t total = 1;
  for (std::size_t n = 0; n < n_sensors; ++n) total *= ts[n].size();
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rest = flat;
    for (std::size_t n = n_sensors; n-- > 0;) {
      idx[n] = rest % ts[n].size();
      rest /= ts[n].size();
    }
    ++best.evaluated;
    bool ok = true;
    double power = 0.0;
    for (std::size_t n = 0; n < n_sensors && ok; ++n) {
      const std::optional<SensorPlan>& e = table[n][idx[n]];
      if (!e) {
        ok = false;
        break;
      }
      plans[n] = *e;
      power += e->power;
    }
    if (!ok || power > cfg.power_budget) continue;
    ++best.feasible;
    const double reward = operator_reward(plans, profiles, comp, cfg);
    if (reward > best.value) {
      best.value = reward;
      best.point.clear();
      for (std::size_t n = 0; n < n_sensors; ++n) best.point.push_back(ts[n][idx[n]]);
    }
  }
  return best;
}

GridResult grid_search_p1b(const SensorProfile& prof, double data_size,
                           const CompressionModel& comp, const OperatorConfig& cfg,
                           const GridSpec& grid) {
  require(grid.objective == GridObjective::kEnergyMin, "grid_search_p1b minimizes energy");
  return scan_2d(grid, [&](double ratio, double t) {
    return sensor_energy(SensorPlan{0.0, data_size, ratio, t}, prof, comp, cfg);
  });
}

GridResult grid_search_p5(const SensorProfile& prof, double data_utility,
                          const CompressionModel& comp, const OperatorConfig& cfg,
                          const GridSpec& grid) {
  require(grid.objective == GridObjective::kEnergyMin, "grid_search_p5 minimizes energy");
  return scan_2d(grid, [&](double root, double t) {
    return sensor_energy(SensorPlan{0.0, data_utility * root, root * root, t}, prof, comp, cfg);
  });
}

GridResult grid_search_joint(std::span<const SensorProfile> profiles,
                             const CompressionModel& comp, const OperatorConfig& cfg,
                             const GridSpec& grid) {
  require(profiles.size() == 1, "grid_search_joint supports exactly one sensor");
  require(grid.objective == GridObjective::kRewardMax, "grid_search_joint maximizes reward");
  const SensorProfile& prof = profiles[0];
  const double window = cfg.sensing_window;
  GridResult best = scan_2d(grid, [&](double t, double ratio) -> std::optional<double> {
    if (t < 0.0 || t > window || ratio < 1.0 || ratio > comp.ratio_max) return std::nullopt;
    if (ratio * comp.epsilon > kMaxExponent) return std::nullopt;
    SensorPlan plan{0.0, (window - t) / time_per_bit(prof, ratio, comp), ratio, t};
    const std::optional<double> p = covering_power(plan, prof, comp, cfg);
    if (!p || *p > cfg.power_budget) return std::nullopt;
    plan.power = *p;
    return operator_reward(std::span<const SensorPlan>(&plan, 1), profiles, comp, cfg);
  });
  if (best.point.empty() || best.value < 0.0) {
    best.point.clear();
    best.value = 0.0;  // zero plan
  }
  return best;
}

GridSpec refine_around(const GridSpec& grid, const GridResult& best, int steps) {
  grid.validate();
  if (best.point.size() != grid.axes.size()) return grid;
  GridSpec out = grid;
  for (std::size_t i = 0; i < grid.axes.size(); ++i) {
    const GridAxis& a = grid.axes[i];
    if (a.lo == a.hi) continue;
    const double step = (a.hi - a.lo) / (a.points - 1);
    out.axes[i].lo = std::max(a.lo, best.point[i] - steps * step);
    out.axes[i].hi = std::min(a.hi, best.point[i] + steps * step);
  }
  return out;
}

}  // namespace wpcs
