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

// Shared helpers for the test binaries. Random instances use the standard
// library engine so they do not share code with the scenario generator.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>

#include "wpcs/model.hpp"

namespace wpcs::testing {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  /// Sensor with parameters drawn over the reference simulation ranges and a
  /// channel gain between 1e-5 and 2e-3.
  SensorProfile profile() {
    SensorProfile p;
    p.channel_gain = log_uniform(1e-5, 2e-3);
    p.sensing_rate = uniform(1e4, 1e5);
    p.sense_energy_per_bit = uniform(1e-12, 1e-11);
    p.cycle_energy = uniform(1e-14, 1e-13);
    p.reward_energy_per_bit = uniform(1e-12, 1e-11);
    p.cpu_frequency = uniform(1e8, 1e9);
    p.utility_weight = 0.04;
    return p;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline double rel_diff(double a, double b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

}  // namespace wpcs::testing
