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
#include <string_view>
#include <vector>

#include "photomesh/decomposition.hpp"
#include "photomesh/encoding.hpp"
#include "photomesh/netlist.hpp"
#include "photomesh/resources.hpp"
#include "photomesh/schedule.hpp"
#include "photomesh/simulator.hpp"
#include "photomesh/waveplate.hpp"

// String-level serialization. Doubles are written with round-trip precision,
// so write -> read is lossless. Malformed input raises ParseError; an element
// variant nobody knows raises UnknownElement.
namespace photomesh::io {

std::string matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(std::string_view text);

std::string plan_to_json(const DecompositionPlan& plan);
DecompositionPlan plan_from_json(std::string_view text);

std::string schedule_to_json(const LayerSchedule& sched);
LayerSchedule schedule_from_json(std::string_view text);

std::string encoding_to_json(const ModeEncoding& enc);
ModeEncoding encoding_from_json(std::string_view text);

std::string gadget_to_json(const PolarizationGadget& g);
PolarizationGadget gadget_from_json(std::string_view text);

std::string netlist_to_json(const Netlist& nl);
/// Also runs check_netlist on the result.
Netlist netlist_from_json(std::string_view text);

std::string report_to_json(const VerificationReport& report, const Transmission& t);

std::string comparison_to_json(const std::vector<ComparisonReport>& reports);

}  // namespace photomesh::io
