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
#include <utility>
#include <vector>

#include "photomesh/linalg.hpp"

namespace photomesh {

/// U = D * T_k * ... * T_1, with `rotations` listed in application order
/// (rotations.front() acts first on the input state).
struct DecompositionPlan {
  int dim = 0;
  std::vector<RotationParams> rotations;
  /// alpha_j in [0, 2pi); D = diag(e^{i alpha_j}).
  std::vector<double> diagonal;
  /// Set when the input was polar-projected onto the unitary group first.
  bool reunitarized = false;
  /// ||U^dagger U - I||_F of the matrix handed to decompose().
  double input_residual = 0.0;
};

struct NullingStep {
  ComplexMatrix matrix;
  RotationParams params;
};

/// U' = U T^{-1}_{col,col+1}(theta, phi) with U'(row, col) = 0.
NullingStep null_element_right(const ComplexMatrix& u, int row, int col);

/// U' = T_{row-1,row}(theta, phi) U with U'(row, col) = 0.
NullingStep null_element_left(const ComplexMatrix& u, int row, int col);

/// Moves a left-applied inverse rotation across a diagonal phase screen:
/// T^{-1}(params) D = D' T(params'). theta is unchanged; D' stays unimodular.
std::pair<std::vector<double>, RotationParams> commute_through_diagonal(
    std::span<const double> diagonal, const RotationParams& params);

/// Rectangular factorisation by alternating column/row nulling.
///
/// Inputs with 1e-10 < ||U^dagger U - I||_F <= 1e-8 are first projected onto
/// the nearest unitary; anything further from unitary is rejected with
/// ErrorCode::NonUnitary.
DecompositionPlan decompose(const ComplexMatrix& u, double tol = 1e-10);

ComplexMatrix reconstruct(const DecompositionPlan& plan);

}  // namespace photomesh
