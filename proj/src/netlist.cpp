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

#include "photomesh/netlist.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "photomesh/error.hpp"

namespace photomesh {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

bool finite_all(std::initializer_list<double> xs) {
  for (double x : xs) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

}  // namespace

std::string_view element_name(const Element& e) {
  return std::visit(overloaded{
                        [](const Mzi&) { return std::string_view("MZI"); },
                        [](const BalancedBS&) { return std::string_view("BalancedBS"); },
                        [](const PhaseShifter&) { return std::string_view("PhaseShifter"); },
                        [](const WavePlateElem&) { return std::string_view("WavePlate"); },
                        [](const CombinedRotation&) {
                          return std::string_view("CombinedRotation");
                        },
                        [](const Pdbs&) { return std::string_view("PDBS"); },
                        [](const Pbs&) { return std::string_view("PBS"); },
                        [](const DiagonalPhases&) {
                          return std::string_view("DiagonalPhases");
                        },
                    },
                    e);
}

std::vector<int> element_paths(const Element& e, int spatial_paths) {
  return std::visit(
      overloaded{
          [](const Mzi& x) { return std::vector<int>{x.p, x.q}; },
          [](const BalancedBS& x) { return std::vector<int>{x.p, x.q}; },
          [](const PhaseShifter& x) { return std::vector<int>{x.path}; },
          [](const WavePlateElem& x) { return std::vector<int>{x.path}; },
          [](const CombinedRotation& x) { return std::vector<int>{x.path}; },
          [](const Pdbs& x) { return std::vector<int>{x.p, x.q}; },
          [](const Pbs& x) { return std::vector<int>{x.p, x.q}; },
          [spatial_paths](const DiagonalPhases&) {
            std::vector<int> all(spatial_paths);
            for (int i = 0; i < spatial_paths; ++i) all[i] = i;
            return all;
          },
      },
      e);
}

std::string_view to_string(Architecture arch) {
  switch (arch) {
    case Architecture::Mzi: return "mzi";
    case Architecture::Hybrid: return "hybrid";
    case Architecture::FullPol: return "fullpol";
  }
  return "mzi";
}

Architecture architecture_from_string(std::string_view s) {
  if (s == "mzi") return Architecture::Mzi;
  if (s == "hybrid") return Architecture::Hybrid;
  if (s == "fullpol") return Architecture::FullPol;
  throw Error(ErrorCode::InvalidArgument, "unknown architecture '" + std::string(s) + "'");
}

std::string_view to_string(StageRole role) {
  switch (role) {
    case StageRole::Omega1: return "omega1";
    case StageRole::Omega2: return "omega2";
    case StageRole::XGate: return "x";
    case StageRole::Omega2Rotations: return "omega2-rotations";
    case StageRole::XGateDagger: return "x-dagger";
    case StageRole::Diagonal: return "diagonal";
  }
  return "omega1";
}

StageRole stage_role_from_string(std::string_view s) {
  for (StageRole r : {StageRole::Omega1, StageRole::Omega2, StageRole::XGate,
                      StageRole::Omega2Rotations, StageRole::XGateDagger,
                      StageRole::Diagonal}) {
    if (to_string(r) == s) return r;
  }
  throw Error(ErrorCode::ParseError, "unknown stage role '" + std::string(s) + "'");
}

void check_netlist(const Netlist& nl) {
  auto fail = [](const std::string& msg) { throw Error(ErrorCode::InvalidNetlist, msg); };
  if (nl.dim < 1 || nl.spatial_paths < 1) fail("netlist dimensions must be positive");
  if (static_cast<int>(nl.inputs.size()) != nl.dim ||
      static_cast<int>(nl.outputs.size()) != nl.dim) {
    fail("netlist must list one input and one output port per logical mode");
  }
  if (nl.simulation_dim() < nl.dim) fail("netlist has fewer physical modes than logical modes");
  for (const auto* ports : {&nl.inputs, &nl.outputs}) {
    std::set<int> seen;
    for (const Port& p : *ports) {
      if (p.path < 0 || p.path >= nl.spatial_paths) fail("port references an unknown path");
      if (!seen.insert(nl.mode_index(p.path, p.pol)).second) fail("two ports share a mode");
    }
  }
  for (std::size_t s = 0; s < nl.stages.size(); ++s) {
    std::set<int> used;
    for (const Element& e : nl.stages[s].elements) {
      std::ostringstream where;
      where << "stage " << s << ", " << element_name(e) << ": ";
      const auto paths = element_paths(e, nl.spatial_paths);
      std::set<int> distinct(paths.begin(), paths.end());
      if (distinct.size() != paths.size()) fail(where.str() + "paths are not distinct");
      for (int p : paths) {
        if (p < 0 || p >= nl.spatial_paths) fail(where.str() + "unknown path " + std::to_string(p));
        if (!used.insert(p).second) {
          fail(where.str() + "path " + std::to_string(p) + " already used in this stage");
        }
      }
      const bool needs_polarization =
          std::holds_alternative<WavePlateElem>(e) || std::holds_alternative<CombinedRotation>(e) ||
          std::holds_alternative<Pdbs>(e) || std::holds_alternative<Pbs>(e) ||
          (std::holds_alternative<PhaseShifter>(e) && std::get<PhaseShifter>(e).pol);
      if (needs_polarization && !nl.polarized) {
        fail(where.str() + "polarization element in a path-only netlist");
      }
      bool finite = std::visit(
          overloaded{
              [](const Mzi& x) { return finite_all({x.theta, x.phi}); },
              [](const BalancedBS&) { return true; },
              [](const PhaseShifter& x) { return finite_all({x.phase}); },
              [](const WavePlateElem& x) { return finite_all({x.plate.orientation}); },
              [](const CombinedRotation& x) {
                bool ok = finite_all({x.gadget.global_phase});
                for (const auto& p : x.gadget.plates) ok = ok && std::isfinite(p.orientation);
                return ok;
              },
              [](const Pdbs& x) { return finite_all({x.theta, x.phi}); },
              [](const Pbs&) { return true; },
              [&](const DiagonalPhases& x) {
                bool ok = static_cast<int>(x.phases.size()) == nl.dim;
                for (double v : x.phases) ok = ok && std::isfinite(v);
                return ok;
              },
          },
          e);
      if (!finite) fail(where.str() + "non-finite or malformed parameters");
    }
  }
}

}  // namespace photomesh
