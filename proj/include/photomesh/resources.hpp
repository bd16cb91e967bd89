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

#include <map>
#include <string>
#include <vector>

#include "photomesh/netlist.hpp"
#include "photomesh/simulator.hpp"

namespace photomesh {

using ElementCounts = std::map<std::string, int>;

/// Element tallies. The trailing phase screen is kept apart from the mesh so
/// the mesh tally can be compared with the closed forms.
struct ElementCensus {
  ElementCounts mesh;
  ElementCounts diagonal;
};

/// Census keys: MZI, PDBS, PBS, HWP (half-wave plate fixed at 45 degrees), WavePlate,
/// combined, BalancedBS, PhaseShifter, DiagonalPhases.
ElementCensus count_elements(const Netlist& nl);

/// baseline {MZI: n(2n-1)}; hybrid {combined: n^2, PDBS: n(n-1)};
/// fullpol {PBS: 2n(2n-1), HWP: 4n^2, combined: n(2n-1)}.
ElementCounts closed_form_counts(Architecture arch, int n);

/// Largest number of interferometric blocks traversed by any logical mode,
/// following fixed routing the same way as transmission().
int optical_depth(const Netlist& nl);

/// 2n, 2n and n for the three architectures.
int expected_optical_depth(Architecture arch, int n);

/// Closed-form worst-case transmission and its symbolic form.
double transmission_closed_form(Architecture arch, int n, const LossModel& loss);
std::string transmission_formula(Architecture arch);

struct ResourceReport {
  Architecture arch = Architecture::Mzi;
  int n = 0;
  ElementCounts counted;
  ElementCounts closed_form;
  ElementCounts diagonal;
  int optical_depth = 0;
  int expected_depth = 0;
  std::string formula;
  double transmission_formula_value = 1.0;
  double transmission_simulated = 1.0;
  /// Zero tallies are ignored when comparing.
  bool counts_match = false;
  bool depth_match = false;
  /// counts_match && depth_match.
  bool match = false;
  /// |simulated - formula| <= 1e-12 * formula.
  bool transmission_match = false;
};

ResourceReport analyze(const Netlist& nl, int n, const LossModel& loss);

struct ComparisonReport {
  int n = 0;
  LossModel loss;
  std::vector<ResourceReport> rows;
  /// Fixed reference figures for the cosine-sine scheme; not computed here.
  std::string reference_note;
};

/// Compiles a fixed-seed Haar unitary of dimension 2n on all three backends
/// and reports counts, depth and transmission for each.
ComparisonReport compare_report(int n, const LossModel& loss);

std::string to_markdown(const std::vector<ComparisonReport>& reports);

}  // namespace photomesh
