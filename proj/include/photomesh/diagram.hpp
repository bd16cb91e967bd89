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

#include "photomesh/netlist.hpp"

namespace photomesh {

/// Drawing lanes are the main spatial paths. Ancillary arms of the
/// polarization X gate are folded onto the lane of the path they pair with,
/// and consecutive X / X-dagger stages are drawn as one box each.
std::string render_ascii(const Netlist& nl);
std::string render_svg(const Netlist& nl);

}  // namespace photomesh
