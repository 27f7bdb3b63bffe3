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

// JSON mapping of the model records. Readers are strict: unknown keys and
// values of the wrong type raise ConfigError, missing keys keep defaults
// unless the caller lists them as required.

#pragma once

#include <initializer_list>
#include <string>

#include "json.hpp"
#include "wpcs/model.hpp"

namespace wpcs {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Json = nlohmann::json;

Json to_json(const OperatorConfig& cfg);
Json to_json(const SensorProfile& prof);
Json to_json(const CompressionModel& comp);

/// Overwrites the fields of `cfg` present in `j`.
void read_operator(const Json& j, OperatorConfig& cfg, const std::string& where = "operator");
/// Every field of a sensor is required.
SensorProfile read_sensor(const Json& j, const std::string& where = "sensor");
void read_compression(const Json& j, CompressionModel& comp, const std::string& where);

/// Throws ConfigError naming the first key of `j` not in `allowed`.
void reject_unknown(const Json& j, std::initializer_list<const char*> allowed,
                    const std::string& where);
/// Reads a number (integers accepted), throwing ConfigError on a type mismatch.
double read_number(const Json& j, const char* key, const std::string& where);

}  // namespace wpcs
