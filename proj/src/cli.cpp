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

#include "wpcs/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "wpcs/oracle.hpp"
#include "wpcs/power_allocation.hpp"

namespace wpcs {
namespace {

// Input or output files that cannot be used; reported as a usage error.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NumericFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int read_int(const Json& j, const char* key, const std::string& where) {
  const Json& v = j.at(key);
  if (!v.is_number_integer()) throw ConfigError(where + "." + key + ": expected an integer");
  return v.get<int>();
}

std::uint64_t read_uint(const Json& j, const char* key, const std::string& where) {
  const Json& v = j.at(key);
  if (!v.is_number_unsigned()) {
    throw ConfigError(where + "." + key + ": expected a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

std::vector<double> read_numbers(const Json& j, const char* key, const std::string& where) {
  const Json& v = j.at(key);
  if (!v.is_array()) throw ConfigError(where + "." + key + ": expected an array of numbers");
  std::vector<double> out;
  for (const Json& x : v) {
    if (!x.is_number()) throw ConfigError(where + "." + key + ": expected an array of numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

Range read_range(const Json& j, const char* key, const std::string& where) {
  const std::vector<double> v = read_numbers(j, key, where);
  if (v.size() != 2) throw ConfigError(where + "." + key + ": expected [lo, hi]");
  return {v[0], v[1]};
}

void read_scenario(const Json& j, RunConfig& rc) {
  const std::string where = "scenario";
  reject_unknown(j,
                 {"n_sensors", "antennas", "antennas_per_sensor", "rician_k", "pathloss_ref",
                  "pathloss_exponent", "distance", "sensing_rate", "sense_energy_per_bit",
                  "cycle_energy", "reward_energy_per_bit", "cpu_frequency", "cycles_per_bit",
                  "utility_weight", "seed", "index"},
                 where);
  ScenarioParams& p = rc.scenario;
  if (j.contains("n_sensors")) p.n_sensors = read_int(j, "n_sensors", where);
  if (j.contains("antennas")) p.antennas = read_int(j, "antennas", where);
  if (j.contains("antennas_per_sensor")) {
    p.antennas_per_sensor = read_int(j, "antennas_per_sensor", where);
  }
  if (j.contains("rician_k")) p.rician_k = read_number(j, "rician_k", where);
  if (j.contains("pathloss_ref")) p.pathloss_ref = read_number(j, "pathloss_ref", where);
  if (j.contains("pathloss_exponent")) {
    p.pathloss_exponent = read_number(j, "pathloss_exponent", where);
  }
  const auto range = [&](const char* key, Range& field) {
    if (j.contains(key)) field = read_range(j, key, where);
  };
  range("distance", p.distance);
  range("sensing_rate", p.sensing_rate);
  range("sense_energy_per_bit", p.sense_energy_per_bit);
  range("cycle_energy", p.cycle_energy);
  range("reward_energy_per_bit", p.reward_energy_per_bit);
  range("cpu_frequency", p.cpu_frequency);
  range("cycles_per_bit", p.cycles_per_bit);
  if (j.contains("utility_weight")) p.utility_weight = read_number(j, "utility_weight", where);
  if (j.contains("seed")) p.seed = read_uint(j, "seed", where);
  if (j.contains("index")) rc.scenario_index = read_uint(j, "index", where);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

struct Instance {
  std::vector<SensorProfile> profiles;
  OperatorConfig cfg;
  std::optional<std::uint64_t> seed;
  std::uint64_t index = 0;
};

Instance resolve_instance(const RunConfig& rc) {
  Instance inst;
  inst.cfg = rc.cfg;
  if (rc.sensors) {
    inst.profiles = *rc.sensors;
    return inst;
  }
  ScenarioParams params = rc.scenario;
  params.cfg = rc.cfg;
  const Scenario sc = generate_scenario(params, params.seed, rc.scenario_index);
  inst.profiles = sc.profiles;
  inst.seed = params.seed;
  inst.index = rc.scenario_index;
  return inst;
}

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw NumericFailure(std::string(what) + " is not finite");
}

Json solution_json(const JointSolution& js, const Instance& inst, const CompressionModel& comp) {
  Json sensors = Json::array();
  for (std::size_t n = 0; n < inst.profiles.size(); ++n) {
    const SensorPlan& plan = js.solution.plans[n];
    const SensorProfile& prof = inst.profiles[n];
    const PlanEnergy e = plan_energy(plan, prof, comp, inst.cfg);
    Json s{{"index", n},
           {"power", plan.power},
           {"data_size", plan.data_size},
           {"ratio", plan.ratio},
           {"tx_duration", plan.tx_duration},
           {"compressed_size", compressed_size(plan)},
           {"energy",
            {{"reward", e.reward},
             {"sensing", e.sensing},
             {"compression", e.compression},
             {"transmission", e.transmission}}},
           {"priority", priority(prof, plan.ratio, comp, inst.cfg)},
           {"selected", static_cast<bool>(js.solution.selected[n])}};
    if (!js.utilities.empty()) s["data_utility"] = js.utilities[n];
    sensors.push_back(std::move(s));
  }
  Json j{{"mode", to_string(comp.mode)},
         {"reward", js.solution.reward},
         {"dual", js.solution.dual},
         {"iterations", js.trace.iterations},
         {"converged", js.trace.converged},
         {"operator", to_json(inst.cfg)},
         {"sensors", std::move(sensors)}};
  if (inst.seed) j["scenario"] = Json{{"seed", *inst.seed}, {"index", inst.index}};
  return j;
}

std::filesystem::path trace_path(const std::filesystem::path& out) {
  std::filesystem::path p = out;
  p.replace_filename(out.stem().string() + ".trace.json");
  return p;
}

int cmd_solve(const RunConfig& rc, const std::string& out_path, std::ostream& out) {
  const CompressionModel comp = rc.compression();
  const Instance inst = resolve_instance(rc);
  const JointSolution js = optimize(inst.profiles, comp, inst.cfg, rc.solver);
  require_finite(js.solution.reward, "reward");
  const Json trace{{"rewards", js.trace.rewards},
                   {"gaps", js.trace.gaps},
                   {"iterations", js.trace.iterations},
                   {"converged", js.trace.converged}};
  const std::filesystem::path path = out_path.empty() ? "solution.json" : out_path;
  write_file(path, solution_json(js, inst, comp).dump(2) + "\n");
  write_file(trace_path(path), trace.dump(2) + "\n");
  out << "reward " << Json(js.solution.reward).dump() << ", " << js.trace.iterations
      << " outer iterations" << (js.trace.converged ? "" : " (not converged)") << "\n";
  return kExitOk;
}

int cmd_sweep(const RunConfig& rc, const std::string& out_path, std::ostream& out) {
  const CompressionModel comp = rc.compression();
  if (!rc.axis) throw ConfigError("sweep: an axis is required (energy, duration or gain)");
  SweepAxis axis;
  try {
    axis = parse_axis(*rc.axis);
  } catch (const InvalidArgument& e) {
    throw ConfigError(std::string("sweep: ") + e.what());
  }
  if (rc.values.empty()) throw ConfigError("sweep: at least one axis value is required");
  if (rc.draws < 1) throw ConfigError("sweep: draws must be >= 1");
  if (rc.sensors) throw ConfigError("sweep: explicit sensors are not supported, use scenario");
  ScenarioParams params = rc.scenario;
  params.cfg = rc.cfg;
  const SweepTable table = sweep(axis, rc.values, params, rc.draws, comp, rc.solver, rc.policies);
  for (const SweepRow& r : table.rows) require_finite(r.mean_reward, "mean reward");
  const std::filesystem::path path = out_path.empty() ? "sweep.csv" : out_path;
  const bool json = path.extension() == ".json";
  write_file(path, json ? to_json(table) : to_csv(table));
  out << table.rows.size() << " rows written to " << path.string() << "\n";
  return kExitOk;
}

int cmd_oracle(const RunConfig& rc, const std::string& out_path, std::ostream& out) {
  const CompressionModel comp = rc.compression();
  const Instance inst = resolve_instance(rc);
  const std::size_t n = inst.profiles.size();
  if (n > 2) throw ConfigError("oracle: at most two sensors are supported");
  if (rc.oracle_points < 2) throw ConfigError("oracle.points must be >= 2");
  const double window = inst.cfg.sensing_window;
  const int pts = rc.oracle_points;

  double solver_reward = 0.0;
  GridResult grid;
  std::string problem;
  if (n <= 1) {
    problem = "joint";
    solver_reward = optimize(inst.profiles, comp, inst.cfg, rc.solver).solution.reward;
    if (n == 1) {
      const GridSpec coarse{{{0.0, window, pts}, {1.0, comp.ratio_max, pts}},
                            GridObjective::kRewardMax};
      grid = grid_search_joint(inst.profiles, comp, inst.cfg, coarse);
      const GridResult fine = grid_search_joint(inst.profiles, comp, inst.cfg,
                                                refine_around(coarse, grid));
      if (fine.value > grid.value) grid = fine;
    }
  } else {
    problem = "fixed-ratio";
    std::vector<double> ratios = rc.oracle_ratios;
    if (ratios.empty()) ratios.assign(n, 1.0);
    if (ratios.size() != n) throw ConfigError("oracle.ratios: one ratio per sensor required");
    for (double r : ratios) {
      if (!(r >= 1.0 && r <= comp.ratio_max)) throw ConfigError("oracle.ratios: out of range");
    }
    const FixedRatioInstance fr = FixedRatioInstance::make(inst.profiles, ratios, comp, inst.cfg);
    solver_reward = solve_fixed_ratio(fr, rc.solver.tol).reward;
    const GridSpec coarse{{{0.0, window, pts}, {0.0, window, pts}}, GridObjective::kRewardMax};
    grid = grid_search_p2(inst.profiles, ratios, comp, inst.cfg, coarse);
    const GridResult fine =
        grid_search_p2(inst.profiles, ratios, comp, inst.cfg, refine_around(coarse, grid));
    if (fine.value > grid.value) grid = fine;
  }
  require_finite(solver_reward, "solver reward");
  const double delta = solver_reward - grid.value;
  const double bound = rc.oracle_tol * (1.0 + std::abs(grid.value));
  const bool within = std::abs(delta) <= bound;
  const Json report{{"mode", to_string(comp.mode)},
                    {"problem", problem},
                    {"sensors", n},
                    {"solver_reward", solver_reward},
                    {"oracle_reward", grid.value},
                    {"oracle_point", grid.point},
                    {"delta", delta},
                    {"tolerance", rc.oracle_tol},
                    {"within_tolerance", within}};
  const std::string text = report.dump(2) + "\n";
  if (out_path.empty()) {
    out << text;
  } else {
    write_file(out_path, text);
  }
  return within ? kExitOk : kExitOracleMismatch;
}

int cmd_generate(const RunConfig& rc, const std::string& out_path, std::ostream& out) {
  ScenarioParams params = rc.scenario;
  params.cfg = rc.cfg;
  const std::string text =
      scenario_to_json(generate_scenario(params, params.seed, rc.scenario_index));
  if (out_path.empty()) {
    out << text;
  } else {
    write_file(out_path, text);
  }
  return kExitOk;
}

int cmd_inspect(const std::string& path, std::ostream& out) {
  const Scenario sc = scenario_from_json(read_file(path));
  sc.cfg.validate();
  Json sensors = Json::array();
  const CompressionModel lossless = CompressionModel::lossless();
  for (std::size_t n = 0; n < sc.profiles.size(); ++n) {
    sc.profiles[n].validate();
    sensors.push_back({{"index", n},
                       {"channel_gain", sc.profiles[n].channel_gain},
                       {"distance", sc.distances[n]},
                       {"priority_uncompressed", priority(sc.profiles[n], 1.0, lossless, sc.cfg)}});
  }
  const Json j{{"seed", sc.seed},
               {"index", sc.index},
               {"n_sensors", sc.profiles.size()},
               {"power_budget", sc.cfg.power_budget},
               {"sensors", std::move(sensors)}};
  out << j.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

CompressionModel RunConfig::compression() const {
  if (!mode) throw ConfigError("mode is required (lossless or lossy)");
  return *mode == CompressionMode::kLossy ? lossy : lossless;
}

RunConfig parse_config(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  RunConfig rc;
  try {
    reject_unknown(j,
                   {"mode", "operator", "compression", "sensors", "scenario", "solver", "sweep",
                    "oracle"},
                   "config");
    if (j.contains("mode")) {
      if (!j["mode"].is_string()) throw ConfigError("config.mode: expected a string");
      rc.mode = parse_mode(j["mode"].get<std::string>());
    }
    if (j.contains("operator")) read_operator(j["operator"], rc.cfg, "operator");
    if (j.contains("compression")) {
      const Json& c = j["compression"];
      reject_unknown(c, {"lossless", "lossy"}, "compression");
      if (c.contains("lossless")) read_compression(c["lossless"], rc.lossless, "compression.lossless");
      if (c.contains("lossy")) read_compression(c["lossy"], rc.lossy, "compression.lossy");
    }
    if (j.contains("sensors")) {
      if (!j["sensors"].is_array()) throw ConfigError("sensors: expected an array");
      std::vector<SensorProfile> sensors;
      for (std::size_t n = 0; n < j["sensors"].size(); ++n) {
        sensors.push_back(read_sensor(j["sensors"][n], "sensors[" + std::to_string(n) + "]"));
      }
      rc.sensors = std::move(sensors);
    }
    if (j.contains("scenario")) read_scenario(j["scenario"], rc);
    if (j.contains("solver")) {
      const Json& s = j["solver"];
      reject_unknown(s, {"tol", "max_outer", "initial_ratios"}, "solver");
      if (s.contains("tol")) rc.solver.tol = read_number(s, "tol", "solver");
      if (s.contains("max_outer")) rc.solver.max_outer = read_int(s, "max_outer", "solver");
      if (s.contains("initial_ratios")) {
        rc.solver.initial_ratios = read_numbers(s, "initial_ratios", "solver");
      }
    }
    if (j.contains("sweep")) {
      const Json& s = j["sweep"];
      reject_unknown(s, {"axis", "values", "draws", "policies"}, "sweep");
      if (s.contains("axis")) {
        if (!s["axis"].is_string()) throw ConfigError("sweep.axis: expected a string");
        rc.axis = s["axis"].get<std::string>();
      }
      if (s.contains("values")) rc.values = read_numbers(s, "values", "sweep");
      if (s.contains("draws")) rc.draws = read_int(s, "draws", "sweep");
      if (s.contains("policies")) {
        const Json& list = s["policies"];
        if (!list.is_array() || list.empty()) {
          throw ConfigError("sweep.policies: expected a non-empty array of names");
        }
        for (const Json& name : list) {
          if (!name.is_string()) throw ConfigError("sweep.policies: expected policy names");
          rc.policies.push_back(parse_policy(name.get<std::string>()));
        }
      }
    }
    if (j.contains("oracle")) {
      const Json& o = j["oracle"];
      reject_unknown(o, {"points", "tol", "ratios"}, "oracle");
      if (o.contains("points")) rc.oracle_points = read_int(o, "points", "oracle");
      if (o.contains("tol")) rc.oracle_tol = read_number(o, "tol", "oracle");
      if (o.contains("ratios")) rc.oracle_ratios = read_numbers(o, "ratios", "oracle");
    }
    rc.cfg.validate();
    rc.lossless.validate();
    rc.lossy.validate();
    if (rc.sensors) {
      for (const SensorProfile& p : *rc.sensors) p.validate();
    }
    ScenarioParams params = rc.scenario;
    params.cfg = rc.cfg;
    params.validate();
    if (!(rc.solver.tol > 0.0)) throw ConfigError("solver.tol must be > 0");
    if (rc.solver.max_outer < 1) throw ConfigError("solver.max_outer must be >= 1");
    if (!(rc.oracle_tol >= 0.0)) throw ConfigError("oracle.tol must be >= 0");
  } catch (const ModelError& e) {
    throw ConfigError(e.what());
  } catch (const Json::exception& e) {
    throw ConfigError(e.what());
  }
  return rc;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Joint power, sensing, compression and transmission planner for wirelessly "
               "powered crowd sensing",
               "wpcs"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  std::string mode;
  std::string axis;
  std::string inspect_path;
  std::uint64_t seed = 0;
  double tol = 0.0;
  int draws = 0;
  std::vector<double> values;

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON configuration file");
    sub->add_option("--seed", seed, "scenario seed");
    sub->add_option("--out", out_path, "output file");
  };
  CLI::App* solve = app.add_subcommand("solve", "optimize one instance");
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "average policies over seeded scenarios");
  CLI::App* oracle = app.add_subcommand("oracle", "compare a solver with a grid search");
  CLI::App* scenario = app.add_subcommand("scenario", "generate or inspect scenario files");
  scenario->require_subcommand(1);
  CLI::App* generate = scenario->add_subcommand("generate", "write a random scenario");
  CLI::App* inspect = scenario->add_subcommand("inspect", "summarize a scenario file");
  inspect->add_option("file", inspect_path, "scenario JSON")->required();
  for (CLI::App* sub : {solve, sweep_cmd, oracle, generate}) common(sub);
  for (CLI::App* sub : {solve, sweep_cmd, oracle}) {
    sub->add_option("--mode", mode, "lossless or lossy");
    sub->add_option("--tol", tol, "solver tolerance (oracle: comparison tolerance)");
  }
  sweep_cmd->add_option("--axis", axis, "energy, duration or gain");
  sweep_cmd->add_option("--values", values, "comma-separated axis values")->delimiter(',');
  sweep_cmd->add_option("--draws", draws, "scenarios per axis value");

  std::vector<std::string> argv_store;
  argv_store.push_back("wpcs");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidConfig;
  }

  const auto given = [](CLI::App* sub, const char* name) {
    return sub->parsed() && sub->count(name) > 0;
  };
  try {
    if (inspect->parsed()) return cmd_inspect(inspect_path, out);

    CLI::App* active = solve->parsed()       ? solve
                       : sweep_cmd->parsed() ? sweep_cmd
                       : oracle->parsed()    ? oracle
                                             : generate;
    RunConfig rc = parse_config(config_path.empty() ? "{}" : read_file(config_path));
    if (given(active, "--seed")) rc.scenario.seed = seed;
    if (active != generate) {
      if (given(active, "--mode")) {
        try {
          rc.mode = parse_mode(mode);
        } catch (const InvalidArgument& e) {
          throw ConfigError(e.what());
        }
      }
      if (given(active, "--tol")) {
        if (active == oracle) {
          if (!(tol >= 0.0)) throw ConfigError("--tol must be >= 0");
          rc.oracle_tol = tol;
        } else {
          if (!(tol > 0.0)) throw ConfigError("--tol must be > 0");
          rc.solver.tol = tol;
        }
      }
    }
    if (active == sweep_cmd) {
      if (given(active, "--axis")) rc.axis = axis;
      if (given(active, "--values")) rc.values = values;
      if (given(active, "--draws")) rc.draws = draws;
    }
    if (active == solve) return cmd_solve(rc, out_path, out);
    if (active == sweep_cmd) return cmd_sweep(rc, out_path, out);
    if (active == oracle) return cmd_oracle(rc, out_path, out);
    return cmd_generate(rc, out_path, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidConfig;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidConfig;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidConfig;
  } catch (const std::exception& e) {
    err << "numeric failure: " << e.what() << "\n";
    return kExitNumericFailure;
  }
}

}  // namespace wpcs
