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

#include "photomesh/waveplate.hpp"

#include <cmath>
#include <sstream>

#include "photomesh/error.hpp"

namespace photomesh {

namespace {

double wrap_half_turn(double angle) {
  double r = std::fmod(angle, kPi);
  if (r < 0.0) r += kPi;
  if (r >= kPi) r = 0.0;
  return r;
}

Matrix2c plane_rotation(double t) {
  Matrix2c r;
  r << std::cos(t), -std::sin(t),
       std::sin(t), std::cos(t);
  return r;
}

}  // namespace

WavePlate WavePlate::make(PlateKind kind, double orientation) {
  if (!std::isfinite(orientation)) {
    throw Error(ErrorCode::InvalidArgument, "wave plate orientation must be finite");
  }
  return WavePlate{kind, wrap_half_turn(orientation)};
}

Matrix2c jones(const WavePlate& plate) {
  const double t = plate.orientation;
  if (plate.kind == PlateKind::HWP) {
    Matrix2c m;
    m << std::cos(2 * t), std::sin(2 * t),
         std::sin(2 * t), -std::cos(2 * t);
    return m;
  }
  Matrix2c retarder = Matrix2c::Zero();
  retarder(0, 0) = 1.0;
  retarder(1, 1) = Complex(0.0, 1.0);
  return plane_rotation(t) * retarder * plane_rotation(-t);
}

Matrix2c gadget_matrix(const PolarizationGadget& gadget, bool exact_phase) {
  Matrix2c m = Matrix2c::Identity();
  for (const WavePlate& p : gadget.plates) m = jones(p) * m;
  if (exact_phase) m *= std::polar(1.0, gadget.global_phase);
  return m;
}

PolarizationGadget synthesize(const Matrix2c& target) {
  const ComplexMatrix t = target;
  if (!target.allFinite() || unitarity_residual(t) > 1e-10) {
    std::ostringstream os;
    os << "synthesize: target is not unitary (residual "
       << (target.allFinite() ? unitarity_residual(t) : INFINITY) << ")";
    throw Error(ErrorCode::NonUnitary, os.str());
  }

  // Q(a) H(b) Q(c) = R(a) X(2b - a - c) R(-c) with X(x) = exp(i x sigma_x), so
  // the stack spans SU(2) through a Y-X-Y Euler decomposition. Conjugating by
  // S = exp(-i pi/4 sigma_x) maps sigma_y to sigma_z and leaves sigma_x alone,
  // turning that into Z-X-Z angles that can be read off the entries.
  const Matrix2c w = target / std::sqrt(target.determinant());
  const double r = 1.0 / std::sqrt(2.0);
  Matrix2c s;
  s << Complex(r, 0), Complex(0, -r),
       Complex(0, -r), Complex(r, 0);
  const Matrix2c wz = s * w * s.adjoint();

  // wz = [[e^{i(c-a)} cos x, i e^{-i(a+c)} sin x], ...]
  constexpr double kTiny = 1e-15;
  const double x = std::atan2(std::abs(wz(0, 1)), std::abs(wz(0, 0)));
  const double diff = std::abs(wz(0, 0)) > kTiny ? std::arg(wz(0, 0)) : 0.0;
  const double sum = std::abs(wz(0, 1)) > kTiny ? kPi / 2 - std::arg(wz(0, 1)) : 0.0;
  const double a = (sum - diff) / 2;
  const double c = (sum + diff) / 2;
  const double b = (x + a + c) / 2;

  PolarizationGadget g;
  g.plates = {WavePlate::make(PlateKind::QWP, c), WavePlate::make(PlateKind::HWP, b),
              WavePlate::make(PlateKind::QWP, a)};
  const ComplexMatrix product = gadget_matrix(g);
  g.global_phase = wrap_phase(optimal_global_phase(t, product));

  const double err = (gadget_matrix(g, true) - target).norm();
  if (!(err <= 1e-10)) {
    std::ostringstream os;
    os << "synthesize: residual " << err << " above 1e-10";
    throw Error(ErrorCode::Internal, os.str());
  }
  return g;
}

}  // namespace photomesh
