// Copyright 2026 The photomesh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <span>
#include <string>
#include <vector>

#include "photomesh/decomposition.hpp"

namespace photomesh {

/// Omega1 columns hold rotations on even m, Omega2 columns on odd m.
enum class LayerKind { Omega1, Omega2 };

struct LayerColumn {
  LayerKind kind = LayerKind::Omega1;
  /// Pairwise disjoint mode pairs, sorted by m.
  std::vector<RotationParams> ops;
};

struct LayerSchedule {
  int dim = 0;
  std::vector<LayerColumn> columns;

  std::size_t rotation_count() const;
};

/// Greedy earliest-column packing of the plan's rotations. Each rotation goes
/// into the first column of its parity that comes after every column already
/// touching one of its modes. Throws SchedulingInfeasible if this would leave
/// an empty column or if a rotation addresses modes outside the plan.
LayerSchedule schedule(const DecompositionPlan& plan);

struct ScheduleCheck {
  bool pass = true;
  std::string first_violation;
};

ScheduleCheck validate(const LayerSchedule& sched);

/// D * (product of columns, first column applied first). An empty diagonal
/// means D = I.
ComplexMatrix replay(const LayerSchedule& sched, std::span<const double> diagonal = {});

}  // namespace photomesh
