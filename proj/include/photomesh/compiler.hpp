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

#include "photomesh/netlist.hpp"
#include "photomesh/schedule.hpp"

namespace photomesh {

/// Phases of the MZI element model:
///   ext phase on the first arm -> BS -> push-pull +-internal/2 -> BS -> fixed i
///   on the first arm,
/// with BS = (1/sqrt 2)[[1, 1], [1, -1]]. The composite equals R(theta, phi).
struct MziSettings {
  double internal = 0.0;  // 2 theta
  double external = 0.0;  // phi - pi/2, wrapped
};

MziSettings mzi_settings(const RotationParams& params);

/// 2x2 transfer of the MZI element model for the given phases.
Matrix2c mzi_transfer(const MziSettings& settings);

/// One MZI per rotation, one stage per column, trailing DiagonalPhases stage.
Netlist compile_mzi(const LayerSchedule& sched, std::span<const double> diagonal);

/// Omega1 columns become per-path combined wave plates; each Omega2 column
/// becomes two sub-stages of polarization-dependent splitters (pairs starting
/// on even paths, then odd paths). Requires an even dimension.
Netlist compile_hybrid(const LayerSchedule& sched, std::span<const double> diagonal,
                       const ModeEncoding& encoding);

/// Every rotation becomes combined wave plates in one path. Each Omega1
/// column is followed by an Omega2 block X, rotations on the shifted paths,
/// X^dagger (with no mid rotations when the column is absent, e.g. N = 2).
Netlist compile_fullpol(const LayerSchedule& sched, std::span<const double> diagonal,
                        const ModeEncoding& encoding);

/// Cyclic shift |j> -> |j+1 mod 2n> over the fullpol encoding, built from a
/// PBS split of every path, a HWP(pi/4) on all 2n arms and n-1 recombining
/// PBS. Spatial paths n..2n-1 are ancillary arms; the outputs list where each
/// logical mode sits afterwards (path 0's two states end up spatially apart).
Netlist xgate_netlist(int paths);

/// Element-wise reverse of xgate_netlist; inputs/outputs swapped.
Netlist xgate_dagger_netlist(int paths);

/// Where logical modes sit between X and X^dagger.
std::vector<Port> shifted_ports(int paths);

struct PathRotation {
  int path = 0;
  /// Block on the path's two logical modes, in logical order.
  Matrix2c block;
};

/// For odd m = 2k-1: the path k and block R with
///   embed(T_{2k-1,2k}) = X^dagger embed_on_path(k, R) X.
PathRotation conjugate_omega2(const RotationParams& rotation, const ModeEncoding& encoding);

/// Re-expresses a block given on logical modes (first, second) of one path in
/// the Jones (h, v) basis.
Matrix2c to_jones_basis(const Matrix2c& logical_block, Polarization first, Polarization second);

/// decompose -> schedule -> compile for the requested architecture.
/// Odd dimensions are rejected for hybrid/fullpol with UnsupportedDimension.
Netlist compile(const ComplexMatrix& u, Architecture arch, double tol = 1e-10);

}  // namespace photomesh
