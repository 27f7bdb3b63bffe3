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

#include "wpcs/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "wpcs/compression.hpp"
#include "wpcs/power_allocation.hpp"
#include "wpcs/serialize.hpp"
#include "wpcs/special.hpp"

namespace wpcs {
namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
  std::uint64_t z = (x += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void require(bool ok, const char* what) {
  if (!ok) throw InvalidArgument(what);
}

void require_range(const Range& r, bool strictly_positive, const char* what) {
  require(r.lo <= r.hi && (strictly_positive ? r.lo > 0.0 : r.lo >= 0.0), what);
}

}  // namespace

Xoshiro256::Xoshiro256(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t sm = seed;
  std::uint64_t key = splitmix64(sm);
  key ^= stream * 0xD1B54A32D192ED03ULL;
  for (std::uint64_t& word : s_) word = splitmix64(key);
}

std::uint64_t Xoshiro256::next() {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Xoshiro256::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double Xoshiro256::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Xoshiro256::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

void ScenarioParams::validate() const {
  require(n_sensors >= 0, "n_sensors must be >= 0");
  require(antennas_per_sensor >= 1, "antennas_per_sensor must be >= 1");
  require(antennas >= antennas_per_sensor, "antennas must be >= antennas_per_sensor");
  require(rician_k >= 0.0, "rician_k must be >= 0");
  require(pathloss_ref > 0.0, "pathloss_ref must be > 0");
  require_range(distance, true, "distance range invalid");
  require_range(sensing_rate, true, "sensing_rate range invalid");
  require_range(sense_energy_per_bit, true, "sense_energy_per_bit range invalid");
  require_range(cycle_energy, true, "cycle_energy range invalid");
  require_range(reward_energy_per_bit, true, "reward_energy_per_bit range invalid");
  require_range(cpu_frequency, true, "cpu_frequency range invalid");
  require_range(cycles_per_bit, false, "cycles_per_bit range invalid");
  require(utility_weight > 0.0, "utility_weight must be > 0");
  cfg.validate();
}

Scenario generate_scenario(const ScenarioParams& params, std::uint64_t seed, std::uint64_t index) {
  params.validate();
  Xoshiro256 rng(seed, index);
  Scenario sc;
  sc.cfg = params.cfg;
  sc.seed = seed;
  sc.index = index;
  const double k = params.rician_k;
  for (int n = 0; n < params.n_sensors; ++n) {
    const double d = rng.uniform(params.distance.lo, params.distance.hi);
    const double omega = params.pathloss_ref * std::pow(d, -params.pathloss_exponent);
    const double los = std::sqrt(omega * k / (1.0 + k));
    const double nlos = std::sqrt(omega / (1.0 + k));
    // h_i = los * 1 + nlos * w_i with w_i ~ CN(0, 1).
    double gain = 0.0;
    for (int i = 0; i < params.antennas_per_sensor; ++i) {
      const double re = los + nlos * std::numbers::sqrt2 / 2.0 * rng.normal();
      const double im = nlos * std::numbers::sqrt2 / 2.0 * rng.normal();
      gain += re * re + im * im;
    }
    SensorProfile p;
    p.channel_gain = gain;
    p.sensing_rate = rng.uniform(params.sensing_rate.lo, params.sensing_rate.hi);
    p.sense_energy_per_bit =
        rng.uniform(params.sense_energy_per_bit.lo, params.sense_energy_per_bit.hi);
    p.cycle_energy = rng.uniform(params.cycle_energy.lo, params.cycle_energy.hi);
    p.reward_energy_per_bit =
        rng.uniform(params.reward_energy_per_bit.lo, params.reward_energy_per_bit.hi);
    p.cpu_frequency = rng.uniform(params.cpu_frequency.lo, params.cpu_frequency.hi);
    p.utility_weight = params.utility_weight;
    sc.cycles_per_bit.push_back(rng.uniform(params.cycles_per_bit.lo, params.cycles_per_bit.hi));
    sc.distances.push_back(d);
    sc.profiles.push_back(p);
  }
  return sc;
}

std::string to_string(Policy policy) {
  switch (policy) {
    case Policy::kProposed: return "proposed";
    case Policy::kFixedRatio: return "fcr";
    case Policy::kEqualPower: return "epa";
    case Policy::kNoCompression: return "no-compression";
  }
  return "unknown";
}

Policy parse_policy(const std::string& name) {
  for (Policy p : {Policy::kProposed, Policy::kFixedRatio, Policy::kEqualPower,
                   Policy::kNoCompression}) {
    if (to_string(p) == name) return p;
  }
  throw InvalidArgument("unknown policy '" + name + "'");
}

std::string policy_label(Policy policy, CompressionMode mode) {
  if (policy == Policy::kNoCompression) return to_string(policy);
  return to_string(policy) + "-" + to_string(mode);
}

Solution equal_power_plan(const Scenario& scenario, const CompressionModel& comp, double tol) {
  const OperatorConfig& cfg = scenario.cfg;
  const std::size_t n_sensors = scenario.profiles.size();
  Solution sol;
  sol.plans.resize(n_sensors);
  sol.selected.assign(n_sensors, true);
  if (n_sensors == 0) return sol;
  const double share = cfg.power_budget / static_cast<double>(n_sensors);
  const bool lossy = comp.mode == CompressionMode::kLossy;
  for (std::size_t n = 0; n < n_sensors; ++n) {
    const SensorProfile& prof = scenario.profiles[n];
    const double budget = cfg.conversion_efficiency * prof.channel_gain * share * cfg.wpt_duration;
    const auto best = [&](double amount) -> CompressionChoice {
      if (lossy) return solve_lossy({prof, amount, comp, cfg}, tol);
      return solve_lossless({prof, amount, comp, cfg}, tol);
    };
    // Minimum energy grows with the amount of data; the top of the range
    // leaves no transmit time at R = 1.
    const auto excess = [&](double amount) {
      try {
        const double e = best(amount).energy;
        return std::isfinite(e) ? e - budget : 1.0;
      } catch (const InfeasiblePlan&) {
        return 1.0;
      }
    };
    const double top = cfg.sensing_window * prof.sensing_rate;
    const BracketedRoot root = bisect_increasing(excess, 0.0, top, 0.0);
    SensorPlan plan;
    plan.power = share;
    if (root.lo > 0.0) {
      const CompressionChoice c = best(root.lo);
      plan.data_size = c.data_size;
      plan.ratio = c.ratio;
      plan.tx_duration = c.tx_duration;
    } else {
      plan.tx_duration = cfg.sensing_window;
    }
    sol.plans[n] = plan;
  }
  sol.reward = operator_reward(sol.plans, scenario.profiles, comp, cfg);
  return sol;
}

PolicyResult run_policy(Policy policy, const Scenario& scenario, const CompressionModel& comp,
                        const SolverSettings& settings) {
  const std::size_t n_sensors = scenario.profiles.size();
  const double fixed =
      comp.mode == CompressionMode::kLossy ? kFixedLossyRatio : kFixedLosslessRatio;
  PolicyResult out;
  switch (policy) {
    case Policy::kFixedRatio:
    case Policy::kNoCompression: {
      const std::vector<double> ratios(n_sensors,
                                       policy == Policy::kFixedRatio ? fixed : 1.0);
      const FixedRatioInstance inst =
          FixedRatioInstance::make(scenario.profiles, ratios, comp, scenario.cfg);
      out.solution = solve_fixed_ratio(inst, settings.tol);
      break;
    }
    case Policy::kEqualPower:
      out.solution = equal_power_plan(scenario, comp, settings.tol);
      break;
    case Policy::kProposed: {
      std::vector<std::vector<double>> starts;
      starts.push_back(std::vector<double>(n_sensors, 1.0));
      starts.push_back(std::vector<double>(n_sensors, fixed));
      std::vector<double> epa;
      for (const SensorPlan& p : equal_power_plan(scenario, comp, settings.tol).plans) {
        epa.push_back(p.ratio);
      }
      starts.push_back(std::move(epa));
      bool first = true;
      for (const std::vector<double>& start : starts) {
        SolverSettings s = settings;
        s.initial_ratios = start;
        JointSolution js = optimize(scenario.profiles, comp, scenario.cfg, s);
        if (first || js.solution.reward > out.solution.reward) {
          out.solution = std::move(js.solution);
          out.iterations = js.trace.iterations;
          first = false;
        }
      }
      break;
    }
  }
  out.reward = out.solution.reward;
  return out;
}

std::string to_string(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::kEnergy: return "energy";
    case SweepAxis::kDuration: return "duration";
    case SweepAxis::kGain: return "gain";
  }
  return "unknown";
}

SweepAxis parse_axis(const std::string& name) {
  for (SweepAxis a : {SweepAxis::kEnergy, SweepAxis::kDuration, SweepAxis::kGain}) {
    if (to_string(a) == name) return a;
  }
  throw InvalidArgument("unknown sweep axis '" + name + "'");
}

std::vector<Policy> all_policies() {
  return {Policy::kProposed, Policy::kFixedRatio, Policy::kEqualPower, Policy::kNoCompression};
}

SweepTable sweep(SweepAxis axis, const std::vector<double>& values, const ScenarioParams& params,
                 int draws, const CompressionModel& comp, const SolverSettings& settings,
                 const std::vector<Policy>& selection) {
  require(!values.empty(), "sweep needs at least one axis value");
  require(draws >= 1, "draws must be >= 1");
  params.validate();
  const std::vector<Policy> policies = selection.empty() ? all_policies() : selection;
  SweepTable table;
  table.axis = to_string(axis);
  table.values = values;
  for (Policy p : policies) table.policies.push_back(policy_label(p, comp.mode));

  for (std::size_t i = 0; i < values.size(); ++i) {
    std::vector<std::vector<double>> rewards(policies.size());
    for (int d = 0; d < draws; ++d) {
      Scenario sc = generate_scenario(params, params.seed, static_cast<std::uint64_t>(d));
      switch (axis) {
        case SweepAxis::kEnergy:
          sc.cfg.power_budget = values[i] / sc.cfg.wpt_duration;
          break;
        case SweepAxis::kDuration:
          sc.cfg.sensing_window = values[i];
          break;
        case SweepAxis::kGain:
          for (std::size_t n = 0; n < sc.profiles.size(); ++n) {
            sc.profiles[n].channel_gain = n == 0 ? values[i] : kGainSweepOthers;
          }
          break;
      }
      sc.cfg.validate();
      for (std::size_t k = 0; k < policies.size(); ++k) {
        const PolicyResult r = run_policy(policies[k], sc, comp, settings);
        rewards[k].push_back(r.reward);
        table.runs.push_back({i, d, table.policies[k], r.reward, r.iterations,
                              r.solution.plans.empty() ? 0.0 : r.solution.plans[0].power});
      }
    }
    for (std::size_t k = 0; k < policies.size(); ++k) {
      double mean = 0.0;
      for (double r : rewards[k]) mean += r;
      mean /= draws;
      double var = 0.0;
      for (double r : rewards[k]) var += (r - mean) * (r - mean);
      const double sd = draws > 1 ? std::sqrt(var / (draws - 1)) : 0.0;
      table.rows.push_back({values[i], table.policies[k], mean, sd, draws, params.seed});
    }
  }
  return table;
}

std::string to_csv(const SweepTable& table) {
  std::string out = "axis_value,policy,mean_reward,std_reward,draws,seed_base\n";
  for (const SweepRow& r : table.rows) {
    out += fmt17(r.axis_value) + "," + r.policy + "," + fmt17(r.mean_reward) + "," +
           fmt17(r.std_reward) + "," + std::to_string(r.draws) + "," +
           std::to_string(r.seed_base) + "\n";
  }
  return out;
}

std::string to_json(const SweepTable& table) {
  // Written by hand so every number carries 17 significant digits.
  std::string out = "{\n  \"axis\": \"" + table.axis + "\",\n  \"rows\": [";
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const SweepRow& r = table.rows[i];
    out += i == 0 ? "\n" : ",\n";
    out += "    {\"axis_value\": " + fmt17(r.axis_value) + ", \"policy\": \"" + r.policy +
           "\", \"mean_reward\": " + fmt17(r.mean_reward) +
           ", \"std_reward\": " + fmt17(r.std_reward) + ", \"draws\": " + std::to_string(r.draws) +
           ", \"seed_base\": " + std::to_string(r.seed_base) + "}";
  }
  out += "\n  ]\n}\n";
  return out;
}

std::vector<SweepRow> parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "axis_value,policy,mean_reward,std_reward,draws,seed_base") {
    throw InvalidArgument("unexpected sweep CSV header");
  }
  std::vector<SweepRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::istringstream fields(line);
    std::string cell;
    while (std::getline(fields, cell, ',')) cells.push_back(cell);
    if (cells.size() != 6) throw InvalidArgument("malformed sweep CSV row: " + line);
    rows.push_back({std::stod(cells[0]), cells[1], std::stod(cells[2]), std::stod(cells[3]),
                    std::stoi(cells[4]), std::stoull(cells[5])});
  }
  return rows;
}

void export_table(const SweepTable& table, const std::filesystem::path& path,
                  ExportFormat format) {
  if (table.rows.empty() || table.policies.empty()) {
    throw InvalidArgument("cannot export an empty sweep table");
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out << (format == ExportFormat::kCsv ? to_csv(table) : to_json(table));
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

std::string scenario_to_json(const Scenario& scenario) {
  Json sensors = Json::array();
  for (std::size_t n = 0; n < scenario.profiles.size(); ++n) {
    Json s = to_json(scenario.profiles[n]);
    s["distance"] = scenario.distances[n];
    s["cycles_per_bit"] = scenario.cycles_per_bit[n];
    sensors.push_back(std::move(s));
  }
  const Json j{{"seed", scenario.seed},
               {"index", scenario.index},
               {"operator", to_json(scenario.cfg)},
               {"sensors", std::move(sensors)}};
  return j.dump(2) + "\n";
}

Scenario scenario_from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ConfigError(std::string("scenario: ") + e.what());
  }
  reject_unknown(j, {"seed", "index", "operator", "sensors"}, "scenario");
  for (const char* key : {"seed", "index", "operator", "sensors"}) {
    if (!j.contains(key)) throw ConfigError(std::string("scenario: missing key '") + key + "'");
  }
  Scenario sc;
  if (!j["seed"].is_number_unsigned() || !j["index"].is_number_unsigned()) {
    throw ConfigError("scenario: seed and index must be non-negative integers");
  }
  sc.seed = j["seed"].get<std::uint64_t>();
  sc.index = j["index"].get<std::uint64_t>();
  read_operator(j["operator"], sc.cfg, "scenario.operator");
  if (!j["sensors"].is_array()) throw ConfigError("scenario.sensors: expected an array");
  for (std::size_t n = 0; n < j["sensors"].size(); ++n) {
    Json s = j["sensors"][n];
    const std::string where = "scenario.sensors[" + std::to_string(n) + "]";
    if (!s.is_object()) throw ConfigError(where + ": expected an object");
    double distance = 0.0;
    double cycles = 0.0;
    if (s.contains("distance")) distance = read_number(s, "distance", where);
    if (s.contains("cycles_per_bit")) cycles = read_number(s, "cycles_per_bit", where);
    s.erase("distance");
    s.erase("cycles_per_bit");
    sc.profiles.push_back(read_sensor(s, where));
    sc.distances.push_back(distance);
    sc.cycles_per_bit.push_back(cycles);
  }
  return sc;
}

}  // namespace wpcs
