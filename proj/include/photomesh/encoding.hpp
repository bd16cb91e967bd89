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

#include <string_view>
#include <vector>

#include "photomesh/linalg.hpp"

namespace photomesh {

enum class Polarization { H, V };

std::string_view to_string(Polarization pol);
Polarization other(Polarization pol);

/// A (spatial path, polarization) label.
struct PhysicalMode {
  int path = 0;
  Polarization pol = Polarization::H;

  friend bool operator==(const PhysicalMode&, const PhysicalMode&) = default;
};

/// Index of a physical mode in the path-major reference order, v before h.
inline int reference_index(const PhysicalMode& mode) {
  return 2 * mode.path + (mode.pol == Polarization::V ? 0 : 1);
}

enum class EncodingKind { Hybrid, FullPol };

std::string_view to_string(EncodingKind kind);

/// Bijection between logical modes 0..2n-1 and (path, polarization) pairs.
class ModeEncoding {
 public:
  ModeEncoding(EncodingKind kind, int paths, std::vector<PhysicalMode> map);

  EncodingKind kind() const { return kind_; }
  int paths() const { return paths_; }
  int dim() const { return 2 * paths_; }

  const PhysicalMode& physical(int logical) const;
  int logical(const PhysicalMode& mode) const;
  const std::vector<PhysicalMode>& map() const { return map_; }

  friend bool operator==(const ModeEncoding&, const ModeEncoding&) = default;

 private:
  EncodingKind kind_;
  int paths_;
  std::vector<PhysicalMode> map_;
  std::vector<int> inverse_;  // reference_index -> logical
};

/// Path k carries logical (2k, 2k+1) as (h, v) for even k and (v, h) for odd k,
/// so Omega1 pairs stay inside one path and Omega2 pairs share a polarization
/// across neighbouring paths.
ModeEncoding hybrid_encoding(int paths);

/// Path k carries logical (2k, 2k+1) as (v, h).
ModeEncoding fullpol_encoding(int paths);

/// P with P(reference_index(physical(j)), j) = 1.
ComplexMatrix permutation_matrix(const ModeEncoding& encoding);

}  // namespace photomesh
