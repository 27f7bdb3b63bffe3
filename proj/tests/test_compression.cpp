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

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "support.hpp"
#include "wpcs/compression.hpp"
#include "wpcs/oracle.hpp"

namespace wpcs {
namespace {

using testing::rel_diff;
using testing::Sampler;

constexpr double kTol = 1e-5;

// Sensed size drawn so that sensing alone fills between 1% and 95% of the window.
double feasible_bits(Sampler& s, const SensorProfile& p, const OperatorConfig& cfg) {
  return s.log_uniform(0.01, 0.95) * cfg.sensing_window * p.sensing_rate;
}

double busy_time(const SensorPlan& plan, const SensorProfile& p, const CompressionModel& comp) {
  return sense_duration(plan, p) + compress_duration(plan, p, comp) + plan.tx_duration;
}

// Energy along the window-filling curve, the objective solve_lossless minimizes.
double tight_energy(const LosslessCompressionProblem& prob, double ratio) {
  return lossless_energy(prob, ratio, prob.data_size * prob.slack(ratio));
}

double tight_energy(const LossyCompressionProblem& prob, double root_ratio) {
  return lossy_energy(prob, root_ratio, prob.data_utility * prob.slack(root_ratio));
}

TEST(Slack, MatchesDefinition) {
  SensorProfile p;
  const LosslessCompressionProblem prob{p, 1e4, CompressionModel::lossless(), OperatorConfig{}};
  const double expected = 1.0 / 1e4 - 1.0 / p.sensing_rate - (std::exp(8.0) - std::exp(4.0)) / p.cpu_frequency;
  EXPECT_LT(rel_diff(prob.slack(2.0), expected), 1e-12);
  const LossyCompressionProblem lossy{p, 1e4, CompressionModel::lossy(), OperatorConfig{}};
  EXPECT_LT(rel_diff(lossy.slack(1.0), 1.0 / 1e4 - 1.0 / p.sensing_rate), 1e-14);
  EXPECT_EQ(lossy.energy_per_bit(1.0), p.reward_energy_per_bit + p.sense_energy_per_bit);
}

TEST(ZFunction, StrictlyIncreasing) {
  Sampler s(51);
  const OperatorConfig cfg;
  for (int trial = 0; trial < 100; ++trial) {
    const SensorProfile p = s.profile();
    const LosslessCompressionProblem prob{p, feasible_bits(s, p, cfg), CompressionModel::lossless(), cfg};
    double upper = 1.0;
    while (upper < 3.0 && prob.slack(upper + 1e-3) > 0.0) upper += 1e-3;
    for (int i = 0; i < 50; ++i) {
      double ra = s.uniform(1.0, upper), rb = s.uniform(1.0, upper);
      if (ra > rb) std::swap(ra, rb);
      if (rb - ra < 1e-6) continue;
      const double za = z_fn(ra, prob), zb = z_fn(rb, prob);
      if (!std::isfinite(za) || !std::isfinite(zb)) continue;
      EXPECT_LT(za, zb) << "trial " << trial << " R=" << ra << "," << rb;
      // The scaled form changes sign with z.
      EXPECT_EQ(za < 0.0, z_fn_scaled(ra, prob) < 0.0);
    }
  }
}

TEST(ZFunction, InfeasibleRatioThrows) {
  SensorProfile p;
  const LosslessCompressionProblem prob{p, 0.9 * p.sensing_rate, CompressionModel::lossless(),
                                        OperatorConfig{}};
  EXPECT_THROW(z_fn(3.0, prob), InfeasiblePlan);
}

TEST(ZcheckFunction, StrictlyIncreasing) {
  Sampler s(52);
  const OperatorConfig cfg;
  for (int trial = 0; trial < 100; ++trial) {
    const SensorProfile p = s.profile();
    const LossyCompressionProblem prob{p, feasible_bits(s, p, cfg) / 5.0, CompressionModel::lossy(), cfg};
    double upper = 1.0;
    while (upper < 5.0 && prob.slack(upper + 1e-3) > 0.0) upper += 1e-3;
    for (int i = 0; i < 50; ++i) {
      double ra = s.uniform(1.0, upper), rb = s.uniform(1.0, upper);
      if (ra > rb) std::swap(ra, rb);
      if (rb - ra < 1e-6) continue;
      const double za = zcheck_fn(ra, prob), zb = zcheck_fn(rb, prob);
      if (!std::isfinite(za) || !std::isfinite(zb)) continue;
      EXPECT_LT(za, zb) << "trial " << trial;
      EXPECT_EQ(za < 0.0, zcheck_fn_scaled(ra, prob) < 0.0);
    }
  }
}

TEST(ZcheckFunction, UnitRootRecoversUncompressedEnergy) {
  SensorProfile p;
  p.channel_gain = 1e-4;
  const OperatorConfig cfg;
  const LossyCompressionProblem lossy{p, 1e4, CompressionModel::lossy(), cfg};
  const LosslessCompressionProblem flat{p, 1e4, CompressionModel::lossless(), cfg};
  EXPECT_LT(rel_diff(lossy_energy(lossy, 1.0, 0.5), lossless_energy(flat, 1.0, 0.5)), 1e-14);
}

// Sizes spread over the whole window, with extra mass close to a full window
// where the upper boundary of the region lies.
double spread_bits(Sampler& s, const SensorProfile& p, const OperatorConfig& cfg) {
  const double frac = s.uniform(0.0, 1.0) < 0.5 ? s.log_uniform(1e-5, 0.95)
                                                 : 1.0 - s.log_uniform(1e-5, 0.2);
  return frac * cfg.sensing_window * p.sensing_rate;
}

TEST(CompressRegion, AgreesWithSolverAndUnitDerivative) {
  Sampler s(53);
  const OperatorConfig cfg;
  const CompressionModel comp = CompressionModel::lossless();
  int checked = 0, compressing = 0, lower = 0;
  for (int trial = 0; checked < 400 && trial < 4000; ++trial) {
    SensorProfile p = s.profile();
    p.channel_gain = s.log_uniform(1e-5, 1e-1);
    const CompressionRegion region = compress_threshold(p, comp, cfg);
    if (!region.defined) continue;
    lower += region.lower_bits > 0.0;
    const double bits = spread_bits(s, p, cfg);
    const bool near_lower = region.lower_bits > 0.0 && std::abs(bits / region.lower_bits - 1.0) < kTol;
    if (std::abs(bits / region.upper_bits - 1.0) < kTol || near_lower) continue;
    ++checked;
    const LosslessCompressionProblem prob{p, bits, comp, cfg};
    const CompressionChoice c = solve_lossless(prob, kTol);
    const bool compresses = c.ratio > 1.0;
    compressing += compresses;
    EXPECT_EQ(region.contains(bits), compresses) << "trial " << trial << " bits " << bits;
    EXPECT_EQ(z_fn_scaled(1.0, prob) < 0.0, compresses);
    // One-sided difference of the window-filling energy at R = 1.
    const double h = 1e-7;
    const double slope = (tight_energy(prob, 1.0 + h) - tight_energy(prob, 1.0)) / h;
    if (std::abs(slope) > 1e-6 * tight_energy(prob, 1.0)) {
      EXPECT_EQ(slope < 0.0, compresses);
    }
  }
  EXPECT_GE(checked, 400);
  EXPECT_GT(lower, 0);
  EXPECT_GT(compressing, 0);
  EXPECT_LT(compressing, checked);
}

TEST(CompressRegion, UndefinedWhenCyclesDominate) {
  SensorProfile p;
  p.cpu_frequency = 1e6;
  p.cycle_energy = 1e-9;
  EXPECT_FALSE(compress_threshold(p, CompressionModel::lossless(), OperatorConfig{}).defined);
}

TEST(SolveLossless, TinyDataStaysUncompressed) {
  // Cycles cost more than the transmit energy they save at low rates.
  SensorProfile p;
  p.channel_gain = 1e-2;
  p.cycle_energy = 1e-13;
  p.cpu_frequency = 1e9;
  const OperatorConfig cfg;
  const LosslessCompressionProblem prob{p, 10.0, CompressionModel::lossless(), cfg};
  const CompressionChoice c = solve_lossless(prob, kTol);
  EXPECT_EQ(c.regime, RatioRegime::kNoCompression);
  EXPECT_EQ(c.ratio, 1.0);
  EXPECT_LT(rel_diff(c.tx_duration, cfg.sensing_window - 10.0 / p.sensing_rate), 1e-14);
}

TEST(SolveLossless, InfeasibleDataThrows) {
  SensorProfile p;
  const LosslessCompressionProblem prob{p, 2.0 * p.sensing_rate, CompressionModel::lossless(),
                                        OperatorConfig{}};
  EXPECT_THROW(solve_lossless(prob), InfeasiblePlan);
}

TEST(SolveLossless, FillsWindowAndIsLocallyOptimal) {
  Sampler s(54);
  const OperatorConfig cfg;
  const CompressionModel comp = CompressionModel::lossless();
  for (int trial = 0; trial < 200; ++trial) {
    const SensorProfile p = s.profile();
    const LosslessCompressionProblem prob{p, feasible_bits(s, p, cfg), comp, cfg};
    const CompressionChoice c = solve_lossless(prob, kTol);
    const SensorPlan plan{0.0, c.data_size, c.ratio, c.tx_duration};
    EXPECT_LE(std::abs(busy_time(plan, p, comp) - cfg.sensing_window), 1e-12 * cfg.sensing_window);
    EXPECT_GT(c.tx_duration, 0.0);
    EXPECT_LT(rel_diff(c.energy, plan_energy(plan, p, comp, cfg).total()), 1e-14);
    for (double delta : {-10.0 * kTol, 10.0 * kTol}) {
      const double r = c.ratio + delta;
      if (r < 1.0 || r > comp.ratio_max || !(prob.slack(r) > 0.0)) continue;
      EXPECT_GE(tight_energy(prob, r), c.energy * (1.0 - 1e-12)) << "trial " << trial;
    }
  }
}

TEST(SolveLossless, MatchesGridOracle) {
  Sampler s(55);
  const OperatorConfig cfg;
  const CompressionModel comp = CompressionModel::lossless();
  for (int trial = 0; trial < 25; ++trial) {
    const SensorProfile p = s.profile();
    const double bits = feasible_bits(s, p, cfg);
    const CompressionChoice c = solve_lossless({p, bits, comp, cfg}, kTol);
    const GridSpec grid{{{1.0, comp.ratio_max, 400}, {1e-4, cfg.sensing_window, 400}},
                        GridObjective::kEnergyMin};
    GridResult best = grid_search_p1b(p, bits, comp, cfg, grid);
    ASSERT_FALSE(best.point.empty());
    EXPECT_LE(c.energy, best.value * (1.0 + 1e-4)) << "trial " << trial;
    best = grid_search_p1b(p, bits, comp, cfg, refine_around(grid, best));
    EXPECT_GE(best.value, c.energy * (1.0 - 1e-6)) << "trial " << trial;
  }
}

TEST(SolveLossy, MatchesGridOracle) {
  Sampler s(56);
  const OperatorConfig cfg;
  const CompressionModel comp = CompressionModel::lossy();
  for (int trial = 0; trial < 25; ++trial) {
    const SensorProfile p = s.profile();
    const double u = feasible_bits(s, p, cfg) / 3.0;
    const CompressionChoice c = solve_lossy({p, u, comp, cfg}, kTol);
    const GridSpec grid{{{1.0, std::sqrt(comp.ratio_max), 400}, {1e-4, cfg.sensing_window, 400}},
                        GridObjective::kEnergyMin};
    GridResult best = grid_search_p5(p, u, comp, cfg, grid);
    ASSERT_FALSE(best.point.empty());
    EXPECT_LE(c.energy, best.value * (1.0 + 1e-4)) << "trial " << trial;
    best = grid_search_p5(p, u, comp, cfg, refine_around(grid, best));
    EXPECT_GE(best.value, c.energy * (1.0 - 1e-6)) << "trial " << trial;
  }
}

TEST(SolveLossy, DeliversRequestedUtility) {
  Sampler s(57);
  const OperatorConfig cfg;
  const CompressionModel comp = CompressionModel::lossy();
  for (int trial = 0; trial < 200; ++trial) {
    const SensorProfile p = s.profile();
    const double u = feasible_bits(s, p, cfg) / 3.0;
    const LossyCompressionProblem prob{p, u, comp, cfg};
    const CompressionChoice c = solve_lossy(prob, kTol);
    EXPECT_LT(rel_diff(comp.quality(c.ratio) * c.data_size, u), 1e-12);
    const SensorPlan plan{0.0, c.data_size, c.ratio, c.tx_duration};
    EXPECT_LE(std::abs(busy_time(plan, p, comp) - cfg.sensing_window), 1e-12 * cfg.sensing_window);
    const double r = std::sqrt(c.ratio);
    for (double delta : {-10.0 * kTol, 10.0 * kTol}) {
      const double rr = r + delta;
      if (rr < 1.0 || rr > std::sqrt(comp.ratio_max) || !(prob.slack(rr) > 0.0)) continue;
      EXPECT_GE(tight_energy(prob, rr), c.energy * (1.0 - 1e-12)) << "trial " << trial;
    }
  }
}

TEST(SolveLossy, UncompressedSensesUtilityDirectly) {
  SensorProfile p;
  p.channel_gain = 1e-2;
  const LossyCompressionProblem prob{p, 100.0, CompressionModel::lossy(), OperatorConfig{}};
  const CompressionChoice c = solve_lossy(prob, kTol);
  ASSERT_EQ(c.regime, RatioRegime::kNoCompression);
  EXPECT_EQ(c.data_size, 100.0);
  EXPECT_EQ(CompressionModel::lossy().quality(1.0), 1.0);
  EXPECT_DOUBLE_EQ(CompressionModel::lossy().quality(25.0), 0.2);
}

// Pairs of sensors sharing every parameter except the varied one.
TEST(CompressionRatioOrdering, WeakerChannelCompressesMore) {
  Sampler s(58);
  const OperatorConfig cfg;
  const CompressionModel comp = CompressionModel::lossless();
  for (int trial = 0; trial < 100; ++trial) {
    SensorProfile strong = s.profile();
    SensorProfile weak = strong;
    const double g1 = s.log_uniform(1e-5, 2e-3), g2 = s.log_uniform(1e-5, 2e-3);
    strong.channel_gain = std::max(g1, g2);
    weak.channel_gain = std::min(g1, g2);
    const double bits = feasible_bits(s, strong, cfg);
    const double r1 = solve_lossless({strong, bits, comp, cfg}, kTol).ratio;
    const double r2 = solve_lossless({weak, bits, comp, cfg}, kTol).ratio;
    EXPECT_LE(r1, r2 + kTol) << "trial " << trial;
  }
}

TEST(CompressionRatioOrdering, CostlierCyclesCompressLess) {
  Sampler s(59);
  const OperatorConfig cfg;
  const CompressionModel comp = CompressionModel::lossless();
  for (int trial = 0; trial < 100; ++trial) {
    SensorProfile costly = s.profile();
    SensorProfile cheap = costly;
    const double q1 = s.uniform(1e-14, 1e-13), q2 = s.uniform(1e-14, 1e-13);
    costly.cycle_energy = std::max(q1, q2);
    cheap.cycle_energy = std::min(q1, q2);
    const double bits = feasible_bits(s, costly, cfg);
    const double r1 = solve_lossless({costly, bits, comp, cfg}, kTol).ratio;
    const double r2 = solve_lossless({cheap, bits, comp, cfg}, kTol).ratio;
    EXPECT_LE(r1, r2 + kTol) << "trial " << trial;
  }
}

}  // namespace
}  // namespace wpcs
