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

#include <string>
#include <vector>

#include "photomesh/netlist.hpp"

namespace photomesh {

/// Scalar power transmission per element, each in (0, 1].
struct LossModel {
  double eta_b = 1.0;       // balanced beam splitter
  double eta_p = 1.0;       // polarization beam splitter
  double eta_w = 1.0;       // wave plate
  double eta_ph_mzi = 1.0;  // tunable phase shifter inside an MZI
  double eta_ph = 1.0;      // combined-phase element inside a PDBS

  /// Throws InvalidArgument unless every coefficient lies in (0, 1].
  void validate() const;
  /// Non-fatal remarks, e.g. when eta_ph_mzi <= eta_ph.
  std::vector<std::string> warnings() const;
};

/// Element action restricted to the simulation-space modes it touches.
struct LocalBlock {
  std::vector<int> modes;
  ComplexMatrix matrix;
};

LocalBlock element_block(const Element& e, const Netlist& nl);

/// Full simulation-space unitary of one element (identity elsewhere).
ComplexMatrix element_unitary(const Element& e, const Netlist& nl);

/// Product of all stages on the simulation space, ancillary rails included.
ComplexMatrix simulation_unitary(const Netlist& nl);

/// Logical transfer matrix: rows indexed by output ports, columns by input
/// ports. Throws InvalidNetlist if amplitude leaks outside the output ports.
ComplexMatrix netlist_unitary(const Netlist& nl);

struct VerificationReport {
  double frobenius_error = 0.0;
  double phase_invariant_error = 0.0;
  /// gamma with netlist ~= e^{i gamma} target.
  double global_phase = 0.0;
  bool pass = false;
};

VerificationReport verify(const Netlist& nl, const ComplexMatrix& target, double tol);

/// Transmission of one traversal of an element.
double element_transmission(const Element& e, const LossModel& loss);

struct Transmission {
  double worst_case = 1.0;
  std::vector<double> per_mode;
};

/// Structural loss accounting. Each logical mode is followed from its input
/// port through the stages; every element on its current path multiplies in
/// its transmission. Only fixed routing elements (PBS, HWP at 45 degrees)
/// move the tracked mode; tunable elements are treated as leaving it in
/// place. The trailing diagonal phase screen is not counted.
Transmission transmission(const Netlist& nl, const LossModel& loss);

/// Logical transfer matrix with each element scaled by sqrt(transmission).
ComplexMatrix lossy_transfer_matrix(const Netlist& nl, const LossModel& loss);

}  // namespace photomesh
