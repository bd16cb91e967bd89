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

#include "photomesh/compiler.hpp"

#include <cmath>
#include <sstream>

#include "photomesh/decomposition.hpp"
#include "photomesh/error.hpp"

namespace photomesh {

namespace {

// Phases accumulated on each logical mode that have not been realised yet.
// A rotation T(theta, phi) acting after diag(a, b) on its pair equals
// e^{ib} T(theta, phi + a - b), so pending phases only ever move forward and
// end up in the trailing diagonal screen.
class PendingPhases {
 public:
  explicit PendingPhases(int dim) : phases_(dim, 0.0) {}

  RotationParams absorb(const RotationParams& p) {
    const double a = phases_[p.m];
    const double b = phases_[p.m + 1];
    phases_[p.m] = phases_[p.m + 1] = b;
    return RotationParams::make(p.m, p.theta, p.phi + a - b);
  }

  // The element realised the rotation only up to e^{i gamma} on its pair.
  void add_pair(int m, double gamma) {
    phases_[m] += gamma;
    phases_[m + 1] += gamma;
  }

  std::vector<double> finish(std::span<const double> diagonal) const {
    std::vector<double> out(phases_.size());
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = wrap_phase(diagonal[j] + phases_[j]);
    return out;
  }

 private:
  std::vector<double> phases_;
};

void check_diagonal(const LayerSchedule& sched, std::span<const double> diagonal) {
  if (sched.dim < 1) throw Error(ErrorCode::InvalidArgument, "empty schedule");
  if (static_cast<int>(diagonal.size()) != sched.dim) {
    throw Error(ErrorCode::InvalidArgument, "diagonal length does not match schedule");
  }
  const ScheduleCheck check = validate(sched);
  if (!check.pass) throw Error(ErrorCode::InvalidArgument, "invalid schedule: " + check.first_violation);
}

void require_even(int dim, std::string_view arch) {
  if (dim % 2 != 0) {
    std::ostringstream os;
    os << "architecture requires even dimension: " << arch << " cannot realise N=" << dim
       << "; use the mzi backend";
    throw Error(ErrorCode::UnsupportedDimension, os.str());
  }
}

void check_encoding(const ModeEncoding& enc, EncodingKind kind, int dim) {
  if (enc.kind() != kind) throw Error(ErrorCode::InvalidArgument, "wrong encoding kind");
  if (enc.dim() != dim) throw Error(ErrorCode::InvalidArgument, "encoding dimension mismatch");
}

std::vector<Port> encoding_ports(const ModeEncoding& enc) {
  std::vector<Port> ports;
  for (const PhysicalMode& m : enc.map()) ports.push_back({m.path, m.pol});
  return ports;
}

// Combined wave plates realising `logical` on the pair (first, second) of a
// path, plus the phase the gadget leaves out.
CombinedRotation path_rotation(int path, const Matrix2c& logical, Polarization first,
                               Polarization second, double* missing_phase) {
  CombinedRotation e{path, synthesize(to_jones_basis(logical, first, second))};
  *missing_phase = e.gadget.global_phase;
  return e;
}

void push_stage(Netlist& nl, Stage stage) {
  if (!stage.elements.empty()) nl.stages.push_back(std::move(stage));
}

Stage make_stage(StageRole role, int layer, bool interferometric = false, int block = -1) {
  Stage s;
  s.role = role;
  s.layer = layer;
  s.interferometric = interferometric;
  s.block = block;
  return s;
}

// Per-path overall phase then a v-only relative phase (hybrid), or one
// polarization-resolved phase per polarization (fullpol).
void append_polarized_diagonal(Netlist& nl, const ModeEncoding& enc,
                               const std::vector<double>& phases, bool overall_plus_relative,
                               int layer) {
  Stage first = make_stage(StageRole::Diagonal, layer);
  Stage second = make_stage(StageRole::Diagonal, layer);
  for (int k = 0; k < enc.paths(); ++k) {
    const double ph_h = phases[enc.logical({k, Polarization::H})];
    const double ph_v = phases[enc.logical({k, Polarization::V})];
    if (overall_plus_relative) {
      first.elements.push_back(PhaseShifter{k, ph_h, std::nullopt});
      second.elements.push_back(PhaseShifter{k, wrap_phase(ph_v - ph_h), Polarization::V});
    } else {
      first.elements.push_back(PhaseShifter{k, ph_v, Polarization::V});
      second.elements.push_back(PhaseShifter{k, ph_h, Polarization::H});
    }
  }
  push_stage(nl, std::move(first));
  push_stage(nl, std::move(second));
}

Stage xgate_stage(StageRole role, int step, int paths, int layer, int block) {
  Stage s = make_stage(role, layer, true, block);
  const int n = paths;
  switch (step) {
    case 0:  // split every path into its h (stays) and v (arm n+k) parts
      for (int k = 0; k < n; ++k) s.elements.push_back(Pbs{k, n + k});
      break;
    case 1:  // flip polarization on every arm
      for (int r = 0; r < 2 * n; ++r) {
        s.elements.push_back(WavePlateElem{r, WavePlate::make(PlateKind::HWP, kPi / 4)});
      }
      break;
    default:  // move the v part of path k onto arm n+k+1
      for (int k = 0; k + 1 < n; ++k) s.elements.push_back(Pbs{k, n + k + 1});
      break;
  }
  return s;
}

void append_xgate(Netlist& nl, int paths, int layer, int block, bool dagger) {
  if (!dagger) {
    for (int step = 0; step < 3; ++step) {
      push_stage(nl, xgate_stage(StageRole::XGate, step, paths, layer, block));
    }
  } else {
    for (int step = 2; step >= 0; --step) {
      push_stage(nl, xgate_stage(StageRole::XGateDagger, step, paths, layer, block));
    }
  }
}

Netlist fullpol_shell(int paths) {
  Netlist nl;
  nl.arch = Architecture::FullPol;
  nl.dim = 2 * paths;
  nl.spatial_paths = 2 * paths;
  nl.polarized = true;
  nl.encoding = fullpol_encoding(paths);
  nl.inputs = encoding_ports(*nl.encoding);
  nl.outputs = nl.inputs;
  return nl;
}

}  // namespace

MziSettings mzi_settings(const RotationParams& p) {
  return MziSettings{2.0 * p.theta, wrap_phase(p.phi - kPi / 2)};
}

Matrix2c mzi_transfer(const MziSettings& s) {
  const double r = 1.0 / std::sqrt(2.0);
  Matrix2c bs;
  bs << r, r,
        r, -r;
  Matrix2c ext = Matrix2c::Identity();
  ext(0, 0) = std::polar(1.0, s.external);
  Matrix2c inner = Matrix2c::Zero();
  inner(0, 0) = std::polar(1.0, s.internal / 2);
  inner(1, 1) = std::polar(1.0, -s.internal / 2);
  Matrix2c out = Matrix2c::Identity();
  out(0, 0) = Complex(0.0, 1.0);
  return out * bs * inner * bs * ext;
}

Matrix2c to_jones_basis(const Matrix2c& logical, Polarization first, Polarization second) {
  if (first == second) throw Error(ErrorCode::InvalidArgument, "path pair must hold both polarizations");
  auto idx = [](Polarization p) { return p == Polarization::H ? 0 : 1; };
  const int a[2] = {idx(first), idx(second)};
  Matrix2c j;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) j(a[r], a[c]) = logical(r, c);
  }
  return j;
}

Netlist compile_mzi(const LayerSchedule& sched, std::span<const double> diagonal) {
  check_diagonal(sched, diagonal);
  const int n = sched.dim;
  Netlist nl;
  nl.arch = Architecture::Mzi;
  nl.dim = n;
  nl.spatial_paths = n;
  nl.polarized = false;
  for (int j = 0; j < n; ++j) nl.inputs.push_back({j, Polarization::H});
  nl.outputs = nl.inputs;

  PendingPhases pending(n);
  int block = 0;
  for (std::size_t c = 0; c < sched.columns.size(); ++c) {
    Stage s = make_stage(c % 2 == 0 ? StageRole::Omega1 : StageRole::Omega2,
                         static_cast<int>(c / 2), true, block++);
    for (const RotationParams& op : sched.columns[c].ops) {
      const RotationParams p = pending.absorb(op);
      s.elements.push_back(Mzi{p.m, p.m + 1, p.theta, p.phi});
    }
    push_stage(nl, std::move(s));
  }
  Stage d = make_stage(StageRole::Diagonal, static_cast<int>(sched.columns.size() + 1) / 2);
  d.elements.push_back(DiagonalPhases{pending.finish(diagonal)});
  push_stage(nl, std::move(d));
  return nl;
}

Netlist compile_hybrid(const LayerSchedule& sched, std::span<const double> diagonal,
                       const ModeEncoding& enc) {
  require_even(sched.dim, "hybrid");
  check_diagonal(sched, diagonal);
  check_encoding(enc, EncodingKind::Hybrid, sched.dim);

  Netlist nl;
  nl.arch = Architecture::Hybrid;
  nl.dim = sched.dim;
  nl.spatial_paths = enc.paths();
  nl.polarized = true;
  nl.encoding = enc;
  nl.inputs = encoding_ports(enc);
  nl.outputs = nl.inputs;

  PendingPhases pending(sched.dim);
  int block = 0;
  for (std::size_t c = 0; c < sched.columns.size(); ++c) {
    const int layer = static_cast<int>(c / 2);
    const LayerColumn& col = sched.columns[c];
    if (col.kind == LayerKind::Omega1) {
      Stage s = make_stage(StageRole::Omega1, layer);
      for (const RotationParams& op : col.ops) {
        const RotationParams p = pending.absorb(op);
        const PhysicalMode& a = enc.physical(p.m);
        const PhysicalMode& b = enc.physical(p.m + 1);
        double missing = 0.0;
        s.elements.push_back(
            path_rotation(a.path, rotation_matrix(p.theta, p.phi), a.pol, b.pol, &missing));
        pending.add_pair(p.m, missing);
      }
      push_stage(nl, std::move(s));
      continue;
    }
    // Omega2: path pairs (k, k+1) with k even first, then k odd.
    Stage parts[2] = {make_stage(StageRole::Omega2, layer, true, block),
                      make_stage(StageRole::Omega2, layer, true, block + 1)};
    block += 2;
    for (const RotationParams& op : col.ops) {
      const RotationParams p = pending.absorb(op);
      const PhysicalMode& a = enc.physical(p.m);
      const PhysicalMode& b = enc.physical(p.m + 1);
      if (a.pol != b.pol || b.path != a.path + 1) {
        throw Error(ErrorCode::Internal, "hybrid Omega2 pair does not share a polarization");
      }
      parts[a.path % 2].elements.push_back(Pdbs{a.path, b.path, a.pol, p.theta, p.phi});
    }
    push_stage(nl, std::move(parts[0]));
    push_stage(nl, std::move(parts[1]));
  }
  append_polarized_diagonal(nl, enc, pending.finish(diagonal), true,
                            static_cast<int>(sched.columns.size() + 1) / 2);
  return nl;
}

std::vector<Port> shifted_ports(int paths) {
  if (paths < 1) throw Error(ErrorCode::InvalidArgument, "X gate needs at least one path");
  const int n = paths;
  std::vector<Port> ports(2 * n);
  ports[0] = {n - 1, Polarization::V};  // left behind on the last main path
  ports[1] = {n, Polarization::H};
  for (int k = 1; k < n; ++k) {
    ports[2 * k] = {n + k, Polarization::V};
    ports[2 * k + 1] = {n + k, Polarization::H};
  }
  return ports;
}

Netlist xgate_netlist(int paths) {
  Netlist nl = fullpol_shell(paths);
  nl.outputs = shifted_ports(paths);
  append_xgate(nl, paths, 0, 0, false);
  return nl;
}

Netlist xgate_dagger_netlist(int paths) {
  Netlist nl = fullpol_shell(paths);
  nl.inputs = shifted_ports(paths);
  append_xgate(nl, paths, 0, 0, true);
  return nl;
}

PathRotation conjugate_omega2(const RotationParams& rotation, const ModeEncoding& enc) {
  if (rotation.m % 2 == 0) {
    throw Error(ErrorCode::InvalidArgument,
                "conjugate_omega2: m must be odd; Omega1 rotations are compiled directly");
  }
  if (enc.kind() != EncodingKind::FullPol) {
    throw Error(ErrorCode::InvalidArgument, "conjugate_omega2 needs the fullpol encoding");
  }
  if (rotation.m < 1 || rotation.m > enc.dim() - 2) {
    throw Error(ErrorCode::IndexError, "conjugate_omega2: mode index out of range");
  }
  // X moves logical 2k-1 -> 2k and 2k -> 2k+1, i.e. onto path k.
  return PathRotation{(rotation.m + 1) / 2, rotation_matrix(rotation.theta, rotation.phi)};
}

Netlist compile_fullpol(const LayerSchedule& sched, std::span<const double> diagonal,
                        const ModeEncoding& enc) {
  require_even(sched.dim, "fullpol");
  check_diagonal(sched, diagonal);
  check_encoding(enc, EncodingKind::FullPol, sched.dim);
  const int n = enc.paths();

  Netlist nl = fullpol_shell(n);
  const std::vector<Port> shifted = shifted_ports(n);
  PendingPhases pending(sched.dim);
  int block = 0;

  for (std::size_t c = 0; c < sched.columns.size(); ++c) {
    const LayerColumn& col = sched.columns[c];
    if (col.kind != LayerKind::Omega1) continue;
    const int layer = static_cast<int>(c / 2);

    Stage s1 = make_stage(StageRole::Omega1, layer);
    for (const RotationParams& op : col.ops) {
      const RotationParams p = pending.absorb(op);
      double missing = 0.0;
      s1.elements.push_back(path_rotation(p.m / 2, rotation_matrix(p.theta, p.phi),
                                          Polarization::V, Polarization::H, &missing));
      pending.add_pair(p.m, missing);
    }
    push_stage(nl, std::move(s1));

    append_xgate(nl, n, layer, block, false);
    Stage mid = make_stage(StageRole::Omega2Rotations, layer);
    if (c + 1 < sched.columns.size()) {
      for (const RotationParams& op : sched.columns[c + 1].ops) {
        const RotationParams p = pending.absorb(op);
        const PathRotation pr = conjugate_omega2(p, enc);
        const Port& first = shifted[2 * pr.path];
        const Port& second = shifted[2 * pr.path + 1];
        double missing = 0.0;
        mid.elements.push_back(path_rotation(first.path, pr.block, first.pol, second.pol, &missing));
        pending.add_pair(p.m, missing);
      }
    }
    push_stage(nl, std::move(mid));
    append_xgate(nl, n, layer, block, true);
    ++block;
  }
  append_polarized_diagonal(nl, enc, pending.finish(diagonal), false,
                            static_cast<int>(sched.columns.size() + 1) / 2);
  return nl;
}

Netlist compile(const ComplexMatrix& u, Architecture arch, double tol) {
  require_square_finite(u, "compile");
  const int n = static_cast<int>(u.rows());
  if (arch != Architecture::Mzi) require_even(n, to_string(arch));
  const DecompositionPlan plan = decompose(u, tol);
  const LayerSchedule sched = schedule(plan);
  switch (arch) {
    case Architecture::Mzi: return compile_mzi(sched, plan.diagonal);
    case Architecture::Hybrid: return compile_hybrid(sched, plan.diagonal, hybrid_encoding(n / 2));
    case Architecture::FullPol:
      return compile_fullpol(sched, plan.diagonal, fullpol_encoding(n / 2));
  }
  throw Error(ErrorCode::Internal, "unreachable architecture");
}

}  // namespace photomesh
