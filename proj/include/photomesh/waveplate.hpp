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

#include <vector>

#include "photomesh/linalg.hpp"

namespace photomesh {

enum class PlateKind { HWP, QWP };

/// Ideal wave plate. Jones matrices use the (h, v) basis:
///   HWP(t) = R(t) diag(1, -1) R(-t),  QWP(t) = R(t) diag(1, i) R(-t),
/// with R the real plane rotation. Both are pi-periodic in t.
struct WavePlate {
  PlateKind kind = PlateKind::HWP;
  /// Fast-axis angle from horizontal, in [0, pi).
  double orientation = 0.0;

  static WavePlate make(PlateKind kind, double orientation);

  friend bool operator==(const WavePlate&, const WavePlate&) = default;
};

/// Plates in light-propagation order plus the phase that the ideal stack
/// misses: target = e^{i global_phase} * J(plates.back()) * ... * J(plates.front()).
struct PolarizationGadget {
  std::vector<WavePlate> plates;
  double global_phase = 0.0;
};

Matrix2c jones(const WavePlate& plate);

/// Product of the plates' Jones matrices; multiplied by e^{i global_phase}
/// when `exact_phase` is set.
Matrix2c gadget_matrix(const PolarizationGadget& gadget, bool exact_phase = false);

/// QWP-HWP-QWP realisation of an arbitrary 2x2 unitary (Jones basis h, v).
/// Throws NonUnitary if ||T^dagger T - I||_F > 1e-10.
PolarizationGadget synthesize(const Matrix2c& target);

}  // namespace photomesh
