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

#include "photomesh/encoding.hpp"

#include <sstream>

#include "photomesh/error.hpp"

namespace photomesh {

std::string_view to_string(Polarization pol) { return pol == Polarization::H ? "h" : "v"; }

Polarization other(Polarization pol) {
  return pol == Polarization::H ? Polarization::V : Polarization::H;
}

std::string_view to_string(EncodingKind kind) {
  return kind == EncodingKind::Hybrid ? "hybrid" : "fullpol";
}

ModeEncoding::ModeEncoding(EncodingKind kind, int paths, std::vector<PhysicalMode> map)
    : kind_(kind), paths_(paths), map_(std::move(map)) {
  if (paths_ < 1) throw Error(ErrorCode::InvalidArgument, "encoding needs at least one path");
  if (static_cast<int>(map_.size()) != 2 * paths_) {
    throw Error(ErrorCode::InvalidArgument, "encoding map must list 2n logical modes");
  }
  inverse_.assign(map_.size(), -1);
  for (std::size_t j = 0; j < map_.size(); ++j) {
    const PhysicalMode& p = map_[j];
    if (p.path < 0 || p.path >= paths_) {
      throw Error(ErrorCode::InvalidArgument, "encoding references an unknown path");
    }
    int& slot = inverse_[reference_index(p)];
    if (slot != -1) {
      std::ostringstream os;
      os << "encoding is not a bijection: logical " << slot << " and " << j
         << " share a physical mode";
      throw Error(ErrorCode::InvalidArgument, os.str());
    }
    slot = static_cast<int>(j);
  }
}

const PhysicalMode& ModeEncoding::physical(int logical) const {
  if (logical < 0 || logical >= dim()) {
    throw Error(ErrorCode::IndexError, "logical mode out of range");
  }
  return map_[logical];
}

int ModeEncoding::logical(const PhysicalMode& mode) const {
  if (mode.path < 0 || mode.path >= paths_) {
    throw Error(ErrorCode::IndexError, "path out of range");
  }
  return inverse_[reference_index(mode)];
}

ModeEncoding hybrid_encoding(int paths) {
  if (paths < 1) throw Error(ErrorCode::InvalidArgument, "hybrid_encoding: n must be >= 1");
  std::vector<PhysicalMode> map;
  map.reserve(2 * paths);
  for (int k = 0; k < paths; ++k) {
    const Polarization first = (k % 2 == 0) ? Polarization::H : Polarization::V;
    map.push_back({k, first});
    map.push_back({k, other(first)});
  }
  return ModeEncoding(EncodingKind::Hybrid, paths, std::move(map));
}

ModeEncoding fullpol_encoding(int paths) {
  if (paths < 1) throw Error(ErrorCode::InvalidArgument, "fullpol_encoding: n must be >= 1");
  std::vector<PhysicalMode> map;
  map.reserve(2 * paths);
  for (int k = 0; k < paths; ++k) {
    map.push_back({k, Polarization::V});
    map.push_back({k, Polarization::H});
  }
  return ModeEncoding(EncodingKind::FullPol, paths, std::move(map));
}

ComplexMatrix permutation_matrix(const ModeEncoding& encoding) {
  const int d = encoding.dim();
  ComplexMatrix p = ComplexMatrix::Zero(d, d);
  for (int j = 0; j < d; ++j) p(reference_index(encoding.physical(j)), j) = 1.0;
  return p;
}

}  // namespace photomesh
