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

// Alternating optimization of the full crowd-sensing round.
//
// Each outer iteration runs two blocks:
//   1. ratios fixed: the dual solve sets power and the per-sensor plan;
//   2. sensed data fixed: every selected sensor picks its ratio and duration
//      to minimize its own energy, and its beam power shrinks to match.
// In lossy mode the second block holds each sensor's delivered utility
// u = l_s / sqrt(R) fixed at the value the first block just produced.
//
// The reported reward sequence is the best plan seen so far, so it never
// decreases. The loop stops once two consecutive rewards differ by less than
// the tolerance.

#pragma once

#include <span>
#include <vector>

#include "wpcs/model.hpp"

namespace wpcs {

struct SolverSettings {
  double tol = 1e-5;  // xi: bisection widths and reward convergence
  int max_outer = 50;
  std::vector<double> initial_ratios;  // empty: start uncompressed (R = 1)
};

struct IterationTrace {
  std::vector<double> rewards;  // R(k), k = 1..iterations
  std::vector<double> gaps;     // |R(k) - R(final)|
  int iterations = 0;
  bool converged = false;
};

struct JointSolution {
  Solution solution;
  IterationTrace trace;
  CompressionMode mode = CompressionMode::kLossless;
  /// Lossy mode: utility u_n fixed for the last compression pass (else empty).
  std::vector<double> utilities;
};

JointSolution optimize_lossless(std::span<const SensorProfile> profiles,
                                const CompressionModel& comp, const OperatorConfig& cfg,
                                const SolverSettings& settings = {});

JointSolution optimize_lossy(std::span<const SensorProfile> profiles, const CompressionModel& comp,
                             const OperatorConfig& cfg, const SolverSettings& settings = {});

/// Dispatches on comp.mode.
JointSolution optimize(std::span<const SensorProfile> profiles, const CompressionModel& comp,
                       const OperatorConfig& cfg, const SolverSettings& settings = {});

/// |R(k) - R(final)| for every recorded iteration.
std::vector<double> trace_gap(const IterationTrace& trace);

}  // namespace wpcs
