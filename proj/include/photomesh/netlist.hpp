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

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "photomesh/encoding.hpp"
#include "photomesh/waveplate.hpp"

namespace photomesh {

/// Two balanced splitters around tunable phases, realising R(theta, phi)
/// between paths p (first mode) and q (second mode).
struct Mzi {
  int p = 0, q = 1;
  double theta = 0.0, phi = 0.0;
};

/// (1/sqrt 2) [[1, 1], [1, -1]] on paths (p, q), polarization independent.
struct BalancedBS {
  int p = 0, q = 1;
};

/// Phase on a whole path, or on one polarization of it when `pol` is set.
struct PhaseShifter {
  int path = 0;
  double phase = 0.0;
  std::optional<Polarization> pol;
};

struct WavePlateElem {
  int path = 0;
  WavePlate plate;
};

/// Combined wave plates realising an arbitrary polarization rotation in one path.
struct CombinedRotation {
  int path = 0;
  PolarizationGadget gadget;
};

/// Polarization-dependent splitter: an MZI whose phases are set to
/// R(theta, phi) for `active` light and to the identity for the other
/// polarization.
struct Pdbs {
  int p = 0, q = 1;
  Polarization active = Polarization::V;
  double theta = 0.0, phi = 0.0;
};

/// Transmits h, reflects v: swaps (p, v) <-> (q, v) and fixes both h modes.
struct Pbs {
  int p = 0, q = 1;
};

/// One phase per logical mode, applied where the netlist's outputs sit.
struct DiagonalPhases {
  std::vector<double> phases;
};

using Element = std::variant<Mzi, BalancedBS, PhaseShifter, WavePlateElem, CombinedRotation,
                             Pdbs, Pbs, DiagonalPhases>;

/// Stable tag used in JSON and reports.
std::string_view element_name(const Element& e);

/// Spatial paths touched by an element (all paths for DiagonalPhases).
std::vector<int> element_paths(const Element& e, int spatial_paths);

enum class Architecture { Mzi, Hybrid, FullPol };

std::string_view to_string(Architecture arch);
Architecture architecture_from_string(std::string_view s);

enum class StageRole { Omega1, Omega2, XGate, Omega2Rotations, XGateDagger, Diagonal };

std::string_view to_string(StageRole role);
StageRole stage_role_from_string(std::string_view s);

struct Stage {
  StageRole role = StageRole::Omega1;
  /// Index of the Omega1/Omega2 layer pair this stage belongs to.
  int layer = 0;
  /// Interferometric stages contribute to optical depth. Stages sharing a
  /// `block` count once.
  bool interferometric = false;
  int block = -1;
  std::vector<Element> elements;
};

/// Where a logical mode enters or leaves the netlist.
struct Port {
  int path = 0;
  Polarization pol = Polarization::H;

  friend bool operator==(const Port&, const Port&) = default;
};

/// Staged element list in light-propagation order.
///
/// The simulation space is one mode per spatial path, or two (v, h) per path
/// when `polarized`. Spatial paths beyond the encoding's n are ancillary rails
/// that must be empty at the inputs and outputs.
struct Netlist {
  Architecture arch = Architecture::Mzi;
  int dim = 0;
  int spatial_paths = 0;
  bool polarized = false;
  std::optional<ModeEncoding> encoding;
  std::vector<Port> inputs;
  std::vector<Port> outputs;
  std::vector<Stage> stages;

  int simulation_dim() const { return polarized ? 2 * spatial_paths : spatial_paths; }
  /// Row/column of (path, pol) in the simulation space.
  int mode_index(int path, Polarization pol) const {
    return polarized ? reference_index({path, pol}) : path;
  }
};

inline constexpr std::string_view kNetlistVersion = "netlist-v1";

/// Checks ranges, per-stage path disjointness and port consistency; throws
/// InvalidNetlist on the first problem.
void check_netlist(const Netlist& nl);

}  // namespace photomesh
