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

#include "wpcs/serialize.hpp"

#include <algorithm>
#include <cstring>

namespace wpcs {

Json to_json(const OperatorConfig& cfg) {
  return Json{{"power_budget", cfg.power_budget},
              {"wpt_duration", cfg.wpt_duration},
              {"sensing_window", cfg.sensing_window},
              {"cost_weight", cfg.cost_weight},
              {"bandwidth", cfg.bandwidth},
              {"noise_power", cfg.noise_power},
              {"conversion_efficiency", cfg.conversion_efficiency}};
}

Json to_json(const SensorProfile& prof) {
  return Json{{"channel_gain", prof.channel_gain},
              {"sensing_rate", prof.sensing_rate},
              {"sense_energy_per_bit", prof.sense_energy_per_bit},
              {"cycle_energy", prof.cycle_energy},
              {"reward_energy_per_bit", prof.reward_energy_per_bit},
              {"cpu_frequency", prof.cpu_frequency},
              {"utility_weight", prof.utility_weight}};
}

Json to_json(const CompressionModel& comp) {
  return Json{{"epsilon", comp.epsilon}, {"ratio_max", comp.ratio_max}};
}

void reject_unknown(const Json& j, std::initializer_list<const char*> allowed,
                    const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + ": expected an object");
  for (const auto& item : j.items()) {
    const bool known = std::any_of(allowed.begin(), allowed.end(),
                                   [&](const char* k) { return item.key() == k; });
    if (!known) throw ConfigError(where + ": unknown key '" + item.key() + "'");
  }
}

double read_number(const Json& j, const char* key, const std::string& where) {
  const Json& v = j.at(key);
  if (!v.is_number()) throw ConfigError(where + "." + key + ": expected a number");
  return v.get<double>();
}

void read_operator(const Json& j, OperatorConfig& cfg, const std::string& where) {
  reject_unknown(j,
                 {"power_budget", "wpt_duration", "sensing_window", "cost_weight", "bandwidth",
                  "noise_power", "conversion_efficiency"},
                 where);
  const auto set = [&](const char* key, double& field) {
    if (j.contains(key)) field = read_number(j, key, where);
  };
  set("power_budget", cfg.power_budget);
  set("wpt_duration", cfg.wpt_duration);
  set("sensing_window", cfg.sensing_window);
  set("cost_weight", cfg.cost_weight);
  set("bandwidth", cfg.bandwidth);
  set("noise_power", cfg.noise_power);
  set("conversion_efficiency", cfg.conversion_efficiency);
}

SensorProfile read_sensor(const Json& j, const std::string& where) {
  static constexpr const char* kKeys[] = {"channel_gain",         "sensing_rate",
                                          "sense_energy_per_bit", "cycle_energy",
                                          "reward_energy_per_bit", "cpu_frequency",
                                          "utility_weight"};
  reject_unknown(j,
                 {kKeys[0], kKeys[1], kKeys[2], kKeys[3], kKeys[4], kKeys[5], kKeys[6]}, where);
  for (const char* key : kKeys) {
    if (!j.contains(key)) throw ConfigError(where + ": missing key '" + key + "'");
  }
  SensorProfile p;
  p.channel_gain = read_number(j, "channel_gain", where);
  p.sensing_rate = read_number(j, "sensing_rate", where);
  p.sense_energy_per_bit = read_number(j, "sense_energy_per_bit", where);
  p.cycle_energy = read_number(j, "cycle_energy", where);
  p.reward_energy_per_bit = read_number(j, "reward_energy_per_bit", where);
  p.cpu_frequency = read_number(j, "cpu_frequency", where);
  p.utility_weight = read_number(j, "utility_weight", where);
  return p;
}

void read_compression(const Json& j, CompressionModel& comp, const std::string& where) {
  reject_unknown(j, {"epsilon", "ratio_max"}, where);
  if (j.contains("epsilon")) comp.epsilon = read_number(j, "epsilon", where);
  if (j.contains("ratio_max")) comp.ratio_max = read_number(j, "ratio_max", where);
}

}  // namespace wpcs
