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

// Command-line front end.
//
//   wpcs solve     [--config F] [--mode M] [--seed S] [--tol X] [--out F]
//   wpcs sweep     [--config F] [--mode M] [--axis A] [--values v1,v2,...]
//                  [--draws N] [--seed S] [--tol X] [--out F]
//   wpcs oracle    [--config F] [--mode M] [--seed S] [--tol X] [--out F]
//   wpcs scenario generate [--config F] [--seed S] [--out F]
//   wpcs scenario inspect  FILE
//
// Exit codes: 0 success, 1 oracle mismatch beyond tolerance, 2 invalid
// configuration or usage (including unreadable input and unwritable
// output), 3 numeric failure inside a solver.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wpcs/joint.hpp"
#include "wpcs/model.hpp"
#include "wpcs/scenario.hpp"
#include "wpcs/serialize.hpp"

namespace wpcs {

inline constexpr int kExitOk = 0;
inline constexpr int kExitOracleMismatch = 1;
inline constexpr int kExitInvalidConfig = 2;
inline constexpr int kExitNumericFailure = 3;

struct RunConfig {
  std::optional<CompressionMode> mode;
  OperatorConfig cfg;
  CompressionModel lossless = CompressionModel::lossless();
  CompressionModel lossy = CompressionModel::lossy();
  std::optional<std::vector<SensorProfile>> sensors;  // explicit sensors replace the scenario
  ScenarioParams scenario;
  std::uint64_t scenario_index = 0;
  SolverSettings solver;
  std::optional<std::string> axis;
  std::vector<double> values;
  int draws = 100;
  std::vector<Policy> policies;  // empty: every policy
  int oracle_points = 400;
  double oracle_tol = 1e-3;
  std::vector<double> oracle_ratios;  // N = 2 fixed ratios; default 1

  CompressionModel compression() const;
};

/// Parses and validates a JSON configuration. Throws ConfigError when any key
/// is unknown or holds an invalid value.
RunConfig parse_config(const std::string& text);

/// Entry point; returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wpcs
