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

#include "photomesh/diagram.hpp"

#include <algorithm>
#include <sstream>

namespace photomesh {

namespace {

struct Column {
  std::string label;
  // One glyph per lane, empty when the lane is untouched.
  std::vector<std::string> glyph;
};

int lane_count(const Netlist& nl) {
  return nl.arch == Architecture::FullPol ? nl.spatial_paths / 2 : nl.spatial_paths;
}

int lane_of(const Netlist& nl, int path) {
  const int lanes = lane_count(nl);
  return path < lanes ? path : path - lanes;
}

std::string glyph_of(const Element& e) {
  return std::visit(
      [](const auto& el) -> std::string {
        using T = std::decay_t<decltype(el)>;
        if constexpr (std::is_same_v<T, Mzi>) return "M";
        else if constexpr (std::is_same_v<T, BalancedBS>) return "B";
        else if constexpr (std::is_same_v<T, PhaseShifter>) return el.pol ? (el.pol == Polarization::H ? "h" : "v") : "P";
        else if constexpr (std::is_same_v<T, WavePlateElem>) return el.plate.kind == PlateKind::HWP ? "H" : "Q";
        else if constexpr (std::is_same_v<T, CombinedRotation>) return "R";
        else if constexpr (std::is_same_v<T, Pdbs>) return "D";
        else if constexpr (std::is_same_v<T, Pbs>) return "S";
        else return "Z";
      },
      e);
}

std::string role_label(StageRole r) {
  switch (r) {
    case StageRole::Omega1: return "O1";
    case StageRole::Omega2: return "O2";
    case StageRole::XGate: return "X";
    case StageRole::Omega2Rotations: return "O2";
    case StageRole::XGateDagger: return "X+";
    case StageRole::Diagonal: return "Dg";
  }
  return "?";
}

std::vector<Column> layout(const Netlist& nl) {
  const int lanes = lane_count(nl);
  std::vector<Column> cols;
  StageRole prev = StageRole::Diagonal;
  bool have_prev = false;
  for (const Stage& s : nl.stages) {
    const bool boxed = s.role == StageRole::XGate || s.role == StageRole::XGateDagger;
    if (boxed && have_prev && prev == s.role) continue;  // merge into one box
    prev = s.role;
    have_prev = true;
    Column c{role_label(s.role), std::vector<std::string>(lanes)};
    if (boxed) {
      std::fill(c.glyph.begin(), c.glyph.end(), s.role == StageRole::XGate ? "X" : "X+");
    } else {
      // Letter on the first lane of an element, "|" on the lanes it also spans.
      for (const Element& e : s.elements) {
        bool first = true;
        for (int p : element_paths(e, nl.spatial_paths)) {
          std::string& g = c.glyph[lane_of(nl, p)];
          if (g.empty()) g = (first || std::holds_alternative<DiagonalPhases>(e)) ? glyph_of(e) : "|";
          first = false;
        }
      }
    }
    cols.push_back(std::move(c));
  }
  return cols;
}

}  // namespace

std::string render_ascii(const Netlist& nl) {
  check_netlist(nl);
  const auto cols = layout(nl);
  const int lanes = lane_count(nl);
  std::ostringstream os;
  std::string header = "    ";
  for (const auto& c : cols) {
    std::string l = c.label;
    l.resize(5, ' ');
    header += l;
  }
  header.erase(header.find_last_not_of(' ') + 1);
  os << header << "\n";
  for (int k = 0; k < lanes; ++k) {
    std::string row = "p" + std::to_string(k);
    row.resize(3, ' ');
    row += '-';
    for (const auto& c : cols) {
      const std::string& g = c.glyph[k];
      if (g.empty()) {
        row += "-----";
      } else {
        std::string cell = "[" + g + "]";
        cell.resize(4, '-');
        row += cell + "-";
      }
    }
    os << row << "\n";
  }
  os << "M=MZI D=PDBS R=wave-plate gadget S=PBS H/Q=HWP/QWP P=phase h/v=pol phase "
        "Z=diagonal X/X+=X gate\n";
  return os.str();
}

std::string render_svg(const Netlist& nl) {
  check_netlist(nl);
  const auto cols = layout(nl);
  const int lanes = lane_count(nl);
  const int dx = 48, dy = 40, x0 = 40, y0 = 40;
  const int width = x0 + dx * static_cast<int>(cols.size()) + 24;
  const int height = y0 + dy * lanes;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" font-family=\"monospace\" font-size=\"12\">\n";
  for (int k = 0; k < lanes; ++k) {
    const int y = y0 + dy * k;
    os << "<text x=\"4\" y=\"" << y + 4 << "\">p" << k << "</text>\n";
    os << "<line x1=\"" << x0 - 12 << "\" y1=\"" << y << "\" x2=\"" << width - 8 << "\" y2=\"" << y
       << "\" stroke=\"black\"/>\n";
  }
  for (std::size_t i = 0; i < cols.size(); ++i) {
    const int x = x0 + dx * static_cast<int>(i);
    os << "<text x=\"" << x << "\" y=\"14\">" << cols[i].label << "</text>\n";
    const bool boxed = cols[i].label == "X" || cols[i].label == "X+";
    if (boxed) {
      os << "<rect x=\"" << x - 4 << "\" y=\"" << y0 - 14 << "\" width=\"32\" height=\""
         << dy * (lanes - 1) + 28 << "\" fill=\"#ddeeff\" stroke=\"black\"/>\n";
      os << "<text x=\"" << x + 4 << "\" y=\"" << y0 + 4 << "\">" << cols[i].label << "</text>\n";
      continue;
    }
    for (int k = 0; k < lanes; ++k) {
      if (cols[i].glyph[k].empty()) continue;
      const int y = y0 + dy * k;
      os << "<rect x=\"" << x - 4 << "\" y=\"" << y - 12 << "\" width=\"24\" height=\"24\" "
         << "fill=\"white\" stroke=\"black\"/>\n";
      os << "<text x=\"" << x + 4 << "\" y=\"" << y + 4 << "\">" << cols[i].glyph[k] << "</text>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace photomesh
