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

#include <complex>
#include <cstdint>
#include <numbers>

#include <Eigen/Dense>

namespace photomesh {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using Matrix2c = Eigen::Matrix2cd;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Wraps an angle into [0, 2pi).
double wrap_phase(double angle);

/// Parameters of one beam-splitting rotation acting on modes (m, m+1).
///
/// phi is kept in [0, 2pi). theta is stored as given; the decomposition only
/// ever emits theta in [0, pi/2].
struct RotationParams {
  int m = 0;
  double theta = 0.0;
  double phi = 0.0;

  static RotationParams make(int m, double theta, double phi);

  friend bool operator==(const RotationParams&, const RotationParams&) = default;
};

/// ||M^dagger M - I||_F. Throws on non-square input.
double unitarity_residual(const ComplexMatrix& m);
bool is_unitary(const ComplexMatrix& m, double tol);

/// Throws InvalidArgument unless `m` is square with finite entries.
void require_square_finite(const ComplexMatrix& m, const char* what);

/// [[e^{i phi} cos theta, -sin theta], [e^{i phi} sin theta, cos theta]]
Matrix2c rotation_matrix(double theta, double phi);

/// Identity of size `dim` with rotation_matrix placed on rows/cols (m, m+1).
ComplexMatrix embed_rotation(int dim, const RotationParams& params);

/// In-place M <- T_{m,m+1} M (mixes rows m and m+1).
void apply_rotation_left(ComplexMatrix& mat, const RotationParams& params);
/// In-place M <- M T_{m,m+1}^{-1} (mixes columns m and m+1).
void apply_inverse_rotation_right(ComplexMatrix& mat, const RotationParams& params);

/// Phase gamma = arg tr(B^dagger A), the minimiser of ||A - e^{i gamma} B||_F.
double optimal_global_phase(const ComplexMatrix& a, const ComplexMatrix& b);

/// min over gamma of ||A - e^{i gamma} B||_F.
double distance_up_to_global_phase(const ComplexMatrix& a, const ComplexMatrix& b);

/// Haar-distributed unitary from the QR factorisation of a complex Ginibre
/// matrix, with the phases of diag(R) folded back into Q. Deterministic for a
/// given seed.
ComplexMatrix random_haar_unitary(int dim, std::uint64_t seed);

/// Nearest unitary in Frobenius norm (W V^dagger from the SVD).
ComplexMatrix polar_unitary(const ComplexMatrix& m);

}  // namespace photomesh
