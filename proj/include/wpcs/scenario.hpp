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

// Randomized scenarios with the policies compared over them, plus sweeps.
//
// Random numbers come from xoshiro256** whose state is filled by splitmix64
// from hash(seed, scenario_index). Uniform variates use the top 53 bits and
// normals use Box-Muller, so a (seed, index) pair yields the same scenario on
// every platform and independently of the order in which scenarios are drawn.

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "wpcs/joint.hpp"
#include "wpcs/model.hpp"

namespace wpcs {

class Xoshiro256 {
 public:
  /// State derived from splitmix64 over hash(seed, stream).
  Xoshiro256(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next();
  double uniform();                     // [0, 1)
  double uniform(double lo, double hi);  // [lo, hi)
  double normal();                      // N(0, 1)

 private:
  std::uint64_t s_[4];
  bool has_spare_ = false;
  double spare_ = 0.0;
};

struct Range {
  double lo = 0.0;
  double hi = 0.0;
};

struct ScenarioParams {
  int n_sensors = 10;
  int antennas = 40;            // AP array size N_t
  int antennas_per_sensor = 4;  // beam group pointed at one sensor
  double rician_k = 10.0;
  double pathloss_ref = 5e-4;  // Omega = pathloss_ref * d^-pathloss_exponent
  double pathloss_exponent = 2.0;
  Range distance{1.0, 5.0};                // [m]
  Range sensing_rate{1e4, 1e5};            // [bit/s]
  Range sense_energy_per_bit{1e-12, 1e-11};  // [J/bit]
  Range cycle_energy{1e-14, 1e-13};        // [J/cycle]
  Range reward_energy_per_bit{1e-12, 1e-11};  // [J/bit]
  Range cpu_frequency{1e8, 1e9};           // [cycle/s]
  Range cycles_per_bit{0.0, 3000.0};       // metadata only
  double utility_weight = 0.04;
  OperatorConfig cfg;
  std::uint64_t seed = 1;

  void validate() const;
};

struct Scenario {
  std::vector<SensorProfile> profiles;
  std::vector<double> distances;
  std::vector<double> cycles_per_bit;  // drawn and recorded, not used by the model
  OperatorConfig cfg;
  std::uint64_t seed = 0;
  std::uint64_t index = 0;
};

Scenario generate_scenario(const ScenarioParams& params, std::uint64_t seed,
                           std::uint64_t index = 0);

enum class Policy { kProposed, kFixedRatio, kEqualPower, kNoCompression };

/// "proposed", "fcr", "epa", "no-compression".
std::string to_string(Policy policy);
Policy parse_policy(const std::string& name);
/// Table label: the policy name with the mode appended, except for
/// no-compression which is mode independent.
std::string policy_label(Policy policy, CompressionMode mode);

inline constexpr double kFixedLosslessRatio = 1.5;
inline constexpr double kFixedLossyRatio = 4.0;

struct PolicyResult {
  double reward = 0.0;
  Solution solution;
  int iterations = 0;  // outer iterations of the winning joint run (0 otherwise)
};

/// Proposed: best of joint runs started from R = 1, from the fixed ratio and
/// from the equal-power ratios. Fixed ratio / no compression: one power
/// allocation solve at R = 1.5 (lossy 4) / R = 1. Equal power: P_n = P0/N and
/// every sensor maximizes its own data under that energy.
PolicyResult run_policy(Policy policy, const Scenario& scenario, const CompressionModel& comp,
                        const SolverSettings& settings = {});

/// Equal-power plan on its own: per sensor, the largest sensed size (lossy:
/// utility) whose minimum energy fits eta g P0/N T0.
Solution equal_power_plan(const Scenario& scenario, const CompressionModel& comp, double tol);

enum class SweepAxis { kEnergy, kDuration, kGain };

std::string to_string(SweepAxis axis);
SweepAxis parse_axis(const std::string& name);

/// Gain of every sensor but the first in a gain sweep.
inline constexpr double kGainSweepOthers = 1e-5;

struct SweepRow {
  double axis_value = 0.0;
  std::string policy;
  double mean_reward = 0.0;
  double std_reward = 0.0;
  int draws = 0;
  std::uint64_t seed_base = 0;
};

struct SweepRun {
  std::size_t value_index = 0;
  int draw = 0;
  std::string policy;
  double reward = 0.0;
  int iterations = 0;
  double first_sensor_power = 0.0;  // P_1 of the returned plan
};

struct SweepTable {
  std::string axis;
  std::vector<double> values;
  std::vector<std::string> policies;
  std::vector<SweepRow> rows;  // value-major, then policy order
  std::vector<SweepRun> runs;  // every (value, draw, policy)
};

/// The four policies in table order.
std::vector<Policy> all_policies();

/// Mean and sample standard deviation of each policy over `draws` scenarios
/// (indices 0..draws-1 of params.seed) at each axis value. Energy values are
/// P0 T0 in joules, durations are T in seconds, gains are sensor 1's g.
/// An empty policy list means all_policies().
SweepTable sweep(SweepAxis axis, const std::vector<double>& values, const ScenarioParams& params,
                 int draws, const CompressionModel& comp, const SolverSettings& settings = {},
                 const std::vector<Policy>& policies = {});

enum class ExportFormat { kCsv, kJson };

std::string to_csv(const SweepTable& table);
std::string to_json(const SweepTable& table);
/// Rows of a CSV produced by to_csv.
std::vector<SweepRow> parse_csv(const std::string& text);
/// Throws InvalidArgument for a table without rows, std::runtime_error when
/// the file cannot be written.
void export_table(const SweepTable& table, const std::filesystem::path& path,
                  ExportFormat format);

std::string scenario_to_json(const Scenario& scenario);
Scenario scenario_from_json(const std::string& text);

}  // namespace wpcs
