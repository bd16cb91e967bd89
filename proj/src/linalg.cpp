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

#include "photomesh/linalg.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "photomesh/error.hpp"

namespace photomesh {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::IndexError: return "index error";
    case ErrorCode::NonUnitary: return "non-unitary input";
    case ErrorCode::SchedulingInfeasible: return "scheduling infeasible";
    case ErrorCode::UnsupportedDimension: return "unsupported dimension";
    case ErrorCode::InvalidNetlist: return "invalid netlist";
    case ErrorCode::ParseError: return "parse error";
    case ErrorCode::UnknownElement: return "unknown element";
    case ErrorCode::Internal: return "internal error";
  }
  return "unknown";
}

double wrap_phase(double angle) {
  double r = std::fmod(angle, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  // fmod of a value just below a multiple of 2pi can round up to 2pi.
  if (r >= kTwoPi) r = 0.0;
  return r;
}

RotationParams RotationParams::make(int m, double theta, double phi) {
  if (!std::isfinite(theta) || !std::isfinite(phi)) {
    throw Error(ErrorCode::InvalidArgument, "rotation angles must be finite");
  }
  return RotationParams{m, theta, wrap_phase(phi)};
}

void require_square_finite(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    std::ostringstream os;
    os << what << ": expected a non-empty square matrix, got " << m.rows() << "x"
       << m.cols();
    throw Error(ErrorCode::InvalidArgument, os.str());
  }
  if (!m.allFinite()) {
    throw Error(ErrorCode::InvalidArgument, std::string(what) + ": non-finite entry");
  }
}

double unitarity_residual(const ComplexMatrix& m) {
  require_square_finite(m, "unitarity_residual");
  const auto n = m.rows();
  return (m.adjoint() * m - ComplexMatrix::Identity(n, n)).norm();
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols() || m.rows() == 0 || !m.allFinite()) return false;
  return unitarity_residual(m) <= tol;
}

Matrix2c rotation_matrix(double theta, double phi) {
  if (!std::isfinite(theta) || !std::isfinite(phi)) {
    throw Error(ErrorCode::InvalidArgument, "rotation_matrix: non-finite angle");
  }
  const Complex e = std::polar(1.0, phi);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Matrix2c r;
  r << e * c, -s,
       e * s, c;
  return r;
}

static void check_pair(int dim, int m) {
  if (m < 0 || m > dim - 2) {
    std::ostringstream os;
    os << "mode index m=" << m << " out of range for dimension " << dim;
    throw Error(ErrorCode::IndexError, os.str());
  }
}

ComplexMatrix embed_rotation(int dim, const RotationParams& params) {
  check_pair(dim, params.m);
  ComplexMatrix t = ComplexMatrix::Identity(dim, dim);
  t.block<2, 2>(params.m, params.m) = rotation_matrix(params.theta, params.phi);
  return t;
}

void apply_rotation_left(ComplexMatrix& mat, const RotationParams& p) {
  check_pair(static_cast<int>(mat.rows()), p.m);
  const Matrix2c r = rotation_matrix(p.theta, p.phi);
  const Eigen::RowVectorXcd top = mat.row(p.m);
  const Eigen::RowVectorXcd bottom = mat.row(p.m + 1);
  mat.row(p.m) = r(0, 0) * top + r(0, 1) * bottom;
  mat.row(p.m + 1) = r(1, 0) * top + r(1, 1) * bottom;
}

void apply_inverse_rotation_right(ComplexMatrix& mat, const RotationParams& p) {
  check_pair(static_cast<int>(mat.cols()), p.m);
  const Matrix2c ri = rotation_matrix(p.theta, p.phi).adjoint();
  const Eigen::VectorXcd left = mat.col(p.m);
  const Eigen::VectorXcd right = mat.col(p.m + 1);
  mat.col(p.m) = left * ri(0, 0) + right * ri(1, 0);
  mat.col(p.m + 1) = left * ri(0, 1) + right * ri(1, 1);
}

static void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    std::ostringstream os;
    os << "dimension mismatch: " << a.rows() << "x" << a.cols() << " vs " << b.rows()
       << "x" << b.cols();
    throw Error(ErrorCode::InvalidArgument, os.str());
  }
}

double optimal_global_phase(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b);
  const Complex overlap = (b.adjoint() * a).trace();
  if (std::abs(overlap) == 0.0) return 0.0;
  return std::arg(overlap);
}

double distance_up_to_global_phase(const ComplexMatrix& a, const ComplexMatrix& b) {
  const double gamma = optimal_global_phase(a, b);
  return (a - std::polar(1.0, gamma) * b).norm();
}

ComplexMatrix random_haar_unitary(int dim, std::uint64_t seed) {
  if (dim < 1) {
    throw Error(ErrorCode::InvalidArgument, "random_haar_unitary: dimension must be >= 1");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix z(dim, dim);
  for (int c = 0; c < dim; ++c) {
    for (int r = 0; r < dim; ++r) {
      const double re = normal(rng);
      const double im = normal(rng);
      z(r, c) = Complex(re, im);
    }
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix& r = qr.matrixQR();
  for (int j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    q.col(j) *= (mag > 0.0) ? d / mag : Complex(1.0, 0.0);
  }
  return q;
}

ComplexMatrix polar_unitary(const ComplexMatrix& m) {
  require_square_finite(m, "polar_unitary");
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

}  // namespace photomesh
