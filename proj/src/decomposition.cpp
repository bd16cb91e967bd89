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

#include "photomesh/decomposition.hpp"

#include <cmath>
#include <sstream>

#include "photomesh/error.hpp"

namespace photomesh {

namespace {

constexpr double kMaxReunitarize = 1e-8;
constexpr double kExactUnitary = 1e-10;

// theta, phi such that e^{-i phi} cos(theta) a = sin(theta) b, i.e. the
// combination a e^{-i phi} cos(theta) - b sin(theta) vanishes.
RotationParams solve_right(int m, Complex a, Complex b) {
  if (a == Complex(0.0, 0.0)) return RotationParams{m, 0.0, 0.0};
  const double theta = std::atan2(std::abs(a), std::abs(b));
  const double phi = (b == Complex(0.0, 0.0)) ? 0.0 : std::arg(a) - std::arg(b);
  return RotationParams::make(m, theta, phi);
}

// theta, phi such that e^{i phi} sin(theta) a + cos(theta) b = 0.
RotationParams solve_left(int m, Complex a, Complex b) {
  if (b == Complex(0.0, 0.0)) return RotationParams{m, 0.0, 0.0};
  const double theta = std::atan2(std::abs(b), std::abs(a));
  const double phi = (a == Complex(0.0, 0.0)) ? 0.0 : std::arg(-b) - std::arg(a);
  return RotationParams::make(m, theta, phi);
}

void check_square(const ComplexMatrix& u) { require_square_finite(u, "decompose"); }

void check_index(bool ok, const char* msg, int row, int col) {
  if (!ok) {
    std::ostringstream os;
    os << msg << " (row " << row << ", col " << col << ")";
    throw Error(ErrorCode::IndexError, os.str());
  }
}

}  // namespace

NullingStep null_element_right(const ComplexMatrix& u, int row, int col) {
  check_square(u);
  const int n = static_cast<int>(u.rows());
  check_index(row >= 0 && row < n && col >= 0 && col < n, "entry out of range", row, col);
  check_index(col < n - 1, "no right neighbour column to mix with", row, col);
  NullingStep step{u, solve_right(col, u(row, col), u(row, col + 1))};
  apply_inverse_rotation_right(step.matrix, step.params);
  step.matrix(row, col) = 0.0;
  return step;
}

NullingStep null_element_left(const ComplexMatrix& u, int row, int col) {
  check_square(u);
  const int n = static_cast<int>(u.rows());
  check_index(row >= 0 && row < n && col >= 0 && col < n, "entry out of range", row, col);
  check_index(row > 0, "no upper neighbour row to mix with", row, col);
  NullingStep step{u, solve_left(row - 1, u(row - 1, col), u(row, col))};
  apply_rotation_left(step.matrix, step.params);
  step.matrix(row, col) = 0.0;
  return step;
}

std::pair<std::vector<double>, RotationParams> commute_through_diagonal(
    std::span<const double> diagonal, const RotationParams& params) {
  const int m = params.m;
  if (m < 0 || static_cast<std::size_t>(m) + 2 > diagonal.size()) {
    throw Error(ErrorCode::IndexError, "commute_through_diagonal: diagonal too short");
  }
  std::vector<double> out(diagonal.begin(), diagonal.end());
  const double alpha = diagonal[m];
  const double beta = diagonal[m + 1];
  // Matching entries of T^{-1}(theta, phi) diag(a, b) against
  // diag(a', b') T(theta, phi') gives phi' = a - b + pi, a' = b - phi + pi, b' = b.
  // With sin(theta) = 0 only a' + phi' = a - phi is fixed; put it all in a'
  // so trivial rotations stay (0, 0).
  if (std::sin(params.theta) == 0.0) {
    out[m] = wrap_phase(alpha - params.phi);
    out[m + 1] = wrap_phase(beta);
    return {std::move(out), RotationParams::make(m, params.theta, 0.0)};
  }
  out[m] = wrap_phase(beta - params.phi + kPi);
  out[m + 1] = wrap_phase(beta);
  return {std::move(out), RotationParams::make(m, params.theta, alpha - beta + kPi)};
}

DecompositionPlan decompose(const ComplexMatrix& input, double tol) {
  check_square(input);
  const int n = static_cast<int>(input.rows());

  DecompositionPlan plan;
  plan.dim = n;
  plan.input_residual = unitarity_residual(input);
  if (plan.input_residual > kMaxReunitarize) {
    std::ostringstream os;
    os << "input is not unitary: residual ||U^dagger U - I||_F = " << plan.input_residual;
    throw Error(ErrorCode::NonUnitary, os.str());
  }
  ComplexMatrix u = input;
  if (plan.input_residual > kExactUnitary) {
    u = polar_unitary(input);
    plan.reunitarized = true;
  }
  const ComplexMatrix target = u;

  std::vector<RotationParams> right;  // applied as U <- U T^{-1}, in order
  std::vector<RotationParams> left;   // applied as U <- T U, in order
  for (int i = 0; i < n - 1; ++i) {
    if (i % 2 == 0) {
      for (int j = 0; j <= i; ++j) {
        const int row = n - 1 - j;
        const int col = i - j;
        const RotationParams p = solve_right(col, u(row, col), u(row, col + 1));
        apply_inverse_rotation_right(u, p);
        u(row, col) = 0.0;
        right.push_back(p);
      }
    } else {
      for (int j = 0; j <= i; ++j) {
        const int row = n - 1 - i + j;
        const int col = j;
        const RotationParams p = solve_left(row - 1, u(row - 1, col), u(row, col));
        apply_rotation_left(u, p);
        u(row, col) = 0.0;
        left.push_back(p);
      }
    }
  }

  // u is now diagonal: L_k..L_1 U R_1^{-1}..R_m^{-1} = D.
  std::vector<double> diag(n);
  for (int j = 0; j < n; ++j) diag[j] = wrap_phase(std::arg(u(j, j)));

  plan.rotations = right;
  for (auto it = left.rbegin(); it != left.rend(); ++it) {
    auto [next_diag, moved] = commute_through_diagonal(diag, *it);
    diag = std::move(next_diag);
    plan.rotations.push_back(moved);
  }
  plan.diagonal = std::move(diag);

  const double err = (reconstruct(plan) - target).norm();
  if (!(err <= tol)) {
    std::ostringstream os;
    os << "decomposition residual " << err << " exceeds tolerance " << tol;
    throw Error(ErrorCode::Internal, os.str());
  }
  return plan;
}

ComplexMatrix reconstruct(const DecompositionPlan& plan) {
  const int n = plan.dim;
  if (n < 1 || static_cast<int>(plan.diagonal.size()) != n) {
    throw Error(ErrorCode::InvalidArgument, "reconstruct: malformed plan");
  }
  ComplexMatrix m = ComplexMatrix::Identity(n, n);
  for (const RotationParams& p : plan.rotations) apply_rotation_left(m, p);
  for (int j = 0; j < n; ++j) m.row(j) *= std::polar(1.0, plan.diagonal[j]);
  return m;
}

}  // namespace photomesh
