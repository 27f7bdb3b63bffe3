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
#include "wpcs/model.hpp"

namespace wpcs {
namespace {

using testing::rel_diff;
using testing::Sampler;

TEST(CompressionCycles, ZeroWithoutCompression) { EXPECT_EQ(compression_cycles(1.0, 4.0), 0.0); }

TEST(CompressionCycles, MatchesDirectExponentials) {
  EXPECT_LT(rel_diff(compression_cycles(2.0, 4.0), std::exp(8.0) - std::exp(4.0)), 1e-14);
  EXPECT_LT(rel_diff(compression_cycles(3.0, 4.0), std::exp(12.0) - std::exp(4.0)), 1e-14);
}

TEST(CompressionCycles, RejectsRatioBelowOne) {
  EXPECT_THROW(compression_cycles(0.5, 4.0), InvalidArgument);
}

TEST(CompressionCycles, OverflowIsInfeasible) {
  EXPECT_THROW(compression_cycles(200.0, 4.0), InfeasiblePlan);
}

TEST(CompressionCycles, StrictlyIncreasing) {
  double prev = compression_cycles(1.0, 4.0);
  for (double r = 1.01; r <= 3.0; r += 0.01) {
    const double c = compression_cycles(r, 4.0);
    EXPECT_GT(c, prev);
    prev = c;
  }
}

TEST(PowerForRate, ReferencePoints) {
  const OperatorConfig cfg;
  EXPECT_EQ(power_for_rate(0.0, cfg), 0.0);
  EXPECT_LT(rel_diff(power_for_rate(cfg.bandwidth, cfg), cfg.noise_power), 1e-14);
  EXPECT_LT(rel_diff(power_for_rate(2.0 * cfg.bandwidth, cfg), 3.0 * cfg.noise_power), 1e-14);
}

TEST(PowerForRate, OverflowReportsInfinity) {
  const OperatorConfig cfg;
  EXPECT_TRUE(std::isinf(power_for_rate(2e3 * cfg.bandwidth, cfg)));
}

TEST(PowerForRate, ConvexOnRandomChords) {
  const OperatorConfig cfg;
  Sampler s(11);
  for (int i = 0; i < 10000; ++i) {
    const double x1 = s.uniform(0.0, 20.0 * cfg.bandwidth);
    const double x2 = s.uniform(0.0, 20.0 * cfg.bandwidth);
    const double th = s.uniform(0.0, 1.0);
    const double lhs = power_for_rate(th * x1 + (1.0 - th) * x2, cfg);
    const double rhs = th * power_for_rate(x1, cfg) + (1.0 - th) * power_for_rate(x2, cfg);
    EXPECT_LE(lhs, rhs * (1.0 + 1e-12));
  }
}

TEST(PlanEnergy, EmptyPlanCostsNothing) {
  const SensorProfile prof;
  const PlanEnergy e =
      plan_energy({0.0, 0.0, 2.0, 0.3}, prof, CompressionModel::lossless(), OperatorConfig{});
  EXPECT_EQ(e.total(), 0.0);
  const PlanEnergy e0 =
      plan_energy({0.0, 0.0, 1.0, 0.0}, prof, CompressionModel::lossless(), OperatorConfig{});
  EXPECT_EQ(e0.total(), 0.0);
}

TEST(PlanEnergy, NoCompressionEnergyAtUnitRatio) {
  const PlanEnergy e = plan_energy({0.0, 1e4, 1.0, 0.5}, SensorProfile{},
                                   CompressionModel::lossless(), OperatorConfig{});
  EXPECT_EQ(e.compression, 0.0);
}

TEST(PlanEnergy, MatchesIndependentEvaluation) {
  SensorProfile prof;
  prof.channel_gain = 1e-5;
  prof.reward_energy_per_bit = 5e-12;
  prof.sense_energy_per_bit = 5e-12;
  prof.cycle_energy = 5e-14;
  const OperatorConfig cfg;  // B = 1e4, N0 = 1e-9
  const double l = 1e4, r = 2.0, t = 0.5;
  const PlanEnergy e = plan_energy({0.0, l, r, t}, prof, CompressionModel::lossless(), cfg);
  // Single expressions of the energy laws.
  const double er = 5e-12 * l;
  const double es = 5e-12 * l;
  const double ec = 5e-14 * l * (std::exp(4.0 * r) - std::exp(4.0));
  const double et = t / 1e-5 * 1e-9 * (std::pow(2.0, l / (t * r) / 1e4) - 1.0);
  EXPECT_LT(rel_diff(e.reward, er), 1e-14);
  EXPECT_LT(rel_diff(e.sensing, es), 1e-14);
  EXPECT_LT(rel_diff(e.compression, ec), 1e-12);
  EXPECT_LT(rel_diff(e.transmission, et), 1e-12);
}

TEST(PlanEnergy, ZeroDurationWithDataIsInfeasible) {
  EXPECT_THROW(plan_energy({0.0, 10.0, 1.0, 0.0}, SensorProfile{}, CompressionModel::lossless(),
                           OperatorConfig{}),
               InfeasiblePlan);
}

TEST(PlanEnergy, TransmissionEnergyJointlyConvex) {
  const SensorProfile prof;
  const OperatorConfig cfg;
  const CompressionModel comp = CompressionModel::lossless();
  Sampler s(12);
  for (int i = 0; i < 5000; ++i) {
    const double l1 = s.uniform(0.0, 5e4), l2 = s.uniform(0.0, 5e4);
    const double t1 = s.uniform(0.2, 1.0), t2 = s.uniform(0.2, 1.0);
    const double r = s.uniform(1.0, 3.0);
    const auto et = [&](double l, double t) {
      return plan_energy({0.0, l, r, t}, prof, comp, cfg).transmission;
    };
    const double mid = et(0.5 * (l1 + l2), 0.5 * (t1 + t2));
    EXPECT_LE(mid, 0.5 * (et(l1, t1) + et(l2, t2)) * (1.0 + 1e-12) + 1e-300);
  }
}

TEST(OperatorReward, ZeroPlanIsZero) {
  const std::vector<SensorPlan> plans(3);
  const std::vector<SensorProfile> profs(3);
  EXPECT_EQ(operator_reward(plans, profs, CompressionModel::lossless(), OperatorConfig{}), 0.0);
}

TEST(OperatorReward, NoCostLeavesUtility) {
  OperatorConfig cfg;
  cfg.cost_weight = 0.0;
  const std::vector<SensorPlan> plans{{0.05, 1e3, 1.0, 0.5}};
  const std::vector<SensorProfile> profs(1);
  EXPECT_DOUBLE_EQ(operator_reward(plans, profs, CompressionModel::lossless(), cfg),
                   0.04 * std::log(1.0 + 1e3));
}

TEST(OperatorReward, NaturalLogOfUnitArgument) {
  const std::vector<SensorPlan> plans{{0.0, std::exp(1.0) - 1.0, 1.0, 0.5}};
  const std::vector<SensorProfile> profs(1);
  EXPECT_NEAR(operator_reward(plans, profs, CompressionModel::lossless(), OperatorConfig{}), 0.04,
              1e-15);
}

TEST(OperatorReward, LossyQualityScalesData) {
  const std::vector<SensorPlan> plans{{0.0, 100.0, 25.0, 0.5}};
  const std::vector<SensorProfile> profs(1);
  EXPECT_NEAR(operator_reward(plans, profs, CompressionModel::lossy(), OperatorConfig{}),
              0.04 * std::log(1.0 + 20.0), 1e-15);
}

TEST(OperatorReward, ConcaveInSensedData) {
  const std::vector<SensorProfile> profs(1);
  const OperatorConfig cfg;
  Sampler s(13);
  for (int i = 0; i < 1000; ++i) {
    const double a = s.uniform(0.0, 1e5), b = s.uniform(0.0, 1e5);
    const auto r = [&](double l) {
      const std::vector<SensorPlan> p{{0.01, l, 1.0, 0.5}};
      return operator_reward(p, profs, CompressionModel::lossless(), cfg);
    };
    EXPECT_GE(r(0.5 * (a + b)), 0.5 * (r(a) + r(b)) - 1e-15);
  }
}

TEST(Feasibility, ZeroPlanFeasible) {
  const std::vector<SensorPlan> plans(2);
  const std::vector<SensorProfile> profs(2);
  EXPECT_TRUE(
      check_feasibility(plans, profs, CompressionModel::lossless(), OperatorConfig{}).empty());
}

TEST(Feasibility, PowerBreachReported) {
  OperatorConfig cfg;
  const std::vector<SensorPlan> plans{{0.6 * 1.01 * cfg.power_budget, 0.0, 1.0, 0.0},
                                      {0.4 * 1.01 * cfg.power_budget, 0.0, 1.0, 0.0}};
  const std::vector<SensorProfile> profs(2);
  const auto v = check_feasibility(plans, profs, CompressionModel::lossless(), cfg);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, ViolationKind::kPower);
  EXPECT_EQ(v[0].sensor, -1);
}

TEST(Feasibility, TimeBoundaryAdmitted) {
  SensorProfile prof;
  prof.sensing_rate = 1e4;
  prof.channel_gain = 1e-3;
  const OperatorConfig cfg;
  // 5000 bits take 0.5 s to sense; the remaining 0.5 s transmits.
  SensorPlan plan{0.0, 5000.0, 1.0, 0.5};
  plan.power = required_power(plan_energy(plan, prof, CompressionModel::lossless(), cfg), prof,
                              cfg);
  ASSERT_LE(plan.power, cfg.power_budget);
  const std::vector<SensorPlan> plans{plan};
  const std::vector<SensorProfile> profs{prof};
  EXPECT_TRUE(check_feasibility(plans, profs, CompressionModel::lossless(), cfg).empty());
  std::vector<SensorPlan> late{plan};
  late[0].tx_duration = 0.5001;
  late[0].power = required_power(plan_energy(late[0], prof, CompressionModel::lossless(), cfg),
                                 prof, cfg);
  const auto v = check_feasibility(late, profs, CompressionModel::lossless(), cfg);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, ViolationKind::kTime);
}

TEST(Feasibility, EnergyShortfallReported) {
  const SensorProfile prof;
  const OperatorConfig cfg;
  const std::vector<SensorPlan> plans{{1e-6, 1e4, 1.0, 0.5}};
  const std::vector<SensorProfile> profs{prof};
  const auto v = check_feasibility(plans, profs, CompressionModel::lossless(), cfg);
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v[0].kind, ViolationKind::kEnergy);
}

TEST(Validation, RejectsOutOfRangeConstants) {
  OperatorConfig cfg;
  cfg.conversion_efficiency = 1.0;
  EXPECT_THROW(cfg.validate(), InvalidArgument);
  SensorProfile prof;
  prof.channel_gain = 0.0;
  EXPECT_THROW(prof.validate(), InvalidArgument);
  CompressionModel comp;
  comp.ratio_max = 0.5;
  EXPECT_THROW(comp.validate(), InvalidArgument);
}

TEST(Modes, RoundTripNames) {
  EXPECT_EQ(parse_mode(to_string(CompressionMode::kLossy)), CompressionMode::kLossy);
  EXPECT_EQ(parse_mode("lossless"), CompressionMode::kLossless);
  EXPECT_THROW(parse_mode("zip"), InvalidArgument);
}

}  // namespace
}  // namespace wpcs
