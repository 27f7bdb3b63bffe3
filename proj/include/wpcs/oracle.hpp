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

// Brute-force grid evaluators for small instances. Objectives are computed
// from the model definitions alone; nothing here calls a solver.
//
// Grids are scanned in lexicographic order (first axis slowest) and only a
// strict improvement replaces the incumbent, so ties resolve to the lowest
// grid index.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "wpcs/model.hpp"

namespace wpcs {

struct GridAxis {
  double lo = 0.0;
  double hi = 0.0;
  int points = 2;

  /// `points` evenly spaced values; a degenerate axis (lo == hi) is one value.
  std::vector<double> values() const;
};

enum class GridObjective { kRewardMax, kEnergyMin };

struct GridSpec {
  std::vector<GridAxis> axes;
  GridObjective objective = GridObjective::kRewardMax;

  /// Throws InvalidArgument unless every axis has lo < hi and points >= 2,
  /// or lo == hi.
  void validate() const;
};

struct GridResult {
  std::vector<double> point;  // best grid coordinates; empty if nothing feasible
  double value = 0.0;         // best objective (reward, or energy in joules)
  std::size_t evaluated = 0;
  std::size_t feasible = 0;
};

/// Fixed ratios, N <= 2: axis n of the grid holds t_n. Each grid point
/// implies l_n = (T - t_n)/beta_n and the beam power that exactly covers the
/// plan's energy; points over the power budget are rejected. The zero plan
/// (reward 0, empty point) is the fallback.
GridResult grid_search_p2(std::span<const SensorProfile> profiles, std::span<const double> ratios,
                          const CompressionModel& comp, const OperatorConfig& cfg,
                          const GridSpec& grid);

/// Lossless, one sensor, sensed size fixed: minimum energy over (R, t) grid
/// points that fit the window. point = {R, t}.
GridResult grid_search_p1b(const SensorProfile& prof, double data_size,
                           const CompressionModel& comp, const OperatorConfig& cfg,
                           const GridSpec& grid);

/// Lossy, one sensor, delivered utility u fixed: minimum energy over
/// (r, t) with l_s = u r, R = r^2. point = {r, t}.
GridResult grid_search_p5(const SensorProfile& prof, double data_utility,
                          const CompressionModel& comp, const OperatorConfig& cfg,
                          const GridSpec& grid);

/// One sensor, both modes: maximum reward over (t, R) (lossy: R itself, not
/// its root) with the window and the energy both used in full. point = {t, R}.
GridResult grid_search_joint(std::span<const SensorProfile> profiles,
                             const CompressionModel& comp, const OperatorConfig& cfg,
                             const GridSpec& grid);

/// A grid with the same point counts whose axes span `steps` grid steps on
/// either side of `best.point`, clipped to the original bounds. Axes of an
/// empty result are returned unchanged.
GridSpec refine_around(const GridSpec& grid, const GridResult& best, int steps = 2);

}  // namespace wpcs
