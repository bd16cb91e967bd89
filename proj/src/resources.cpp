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

#include "photomesh/resources.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <set>
#include <sstream>

#include "photomesh/compiler.hpp"
#include "photomesh/error.hpp"

namespace photomesh {

namespace {

std::string census_key(const Element& e) {
  if (const auto* wp = std::get_if<WavePlateElem>(&e)) {
    const bool fixed = wp->plate.kind == PlateKind::HWP &&
                       std::abs(wp->plate.orientation - kPi / 4) < 1e-12;
    return fixed ? "HWP" : "WavePlate";
  }
  if (std::holds_alternative<CombinedRotation>(e)) return "combined";
  return std::string(element_name(e));
}

void check_n(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "path count n must be >= 1");
}

ElementCounts drop_zero(ElementCounts c) {
  std::erase_if(c, [](const auto& kv) { return kv.second == 0; });
  return c;
}

std::string format_counts(const ElementCounts& c) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : c) {
    os << (first ? "" : ", ") << k << " " << v;
    first = false;
  }
  return os.str();
}

}  // namespace

ElementCensus count_elements(const Netlist& nl) {
  ElementCensus c;
  for (const Stage& s : nl.stages) {
    ElementCounts& target = s.role == StageRole::Diagonal ? c.diagonal : c.mesh;
    for (const Element& e : s.elements) ++target[census_key(e)];
  }
  return c;
}

ElementCounts closed_form_counts(Architecture arch, int n) {
  check_n(n);
  switch (arch) {
    case Architecture::Mzi: return {{"MZI", n * (2 * n - 1)}};
    case Architecture::Hybrid: {
      return {{"combined", n * n}, {"PDBS", n * (n - 1)}};
    }
    case Architecture::FullPol:
      return {{"PBS", 2 * n * (2 * n - 1)}, {"HWP", 4 * n * n}, {"combined", n * (2 * n - 1)}};
  }
  throw Error(ErrorCode::Internal, "unreachable architecture");
}

int optical_depth(const Netlist& nl) {
  check_netlist(nl);
  int worst = 0;
  for (int j = 0; j < nl.dim; ++j) {
    Port at = nl.inputs[j];
    std::set<int> blocks;
    for (const Stage& s : nl.stages) {
      if (s.role == StageRole::Diagonal) continue;
      for (const Element& e : s.elements) {
        const auto paths = element_paths(e, nl.spatial_paths);
        if (std::find(paths.begin(), paths.end(), at.path) == paths.end()) continue;
        if (s.interferometric) blocks.insert(s.block);
        if (const auto* pbs = std::get_if<Pbs>(&e); pbs && at.pol == Polarization::V) {
          at.path = (at.path == pbs->p) ? pbs->q : pbs->p;
        } else if (const auto* wp = std::get_if<WavePlateElem>(&e);
                   wp && wp->plate.kind == PlateKind::HWP &&
                   std::abs(wp->plate.orientation - kPi / 4) < 1e-12) {
          at.pol = other(at.pol);
        }
        break;
      }
    }
    worst = std::max(worst, static_cast<int>(blocks.size()));
  }
  return worst;
}

int expected_optical_depth(Architecture arch, int n) {
  check_n(n);
  return arch == Architecture::FullPol ? n : 2 * n;
}

double transmission_closed_form(Architecture arch, int n, const LossModel& l) {
  check_n(n);
  switch (arch) {
    case Architecture::Mzi: return std::pow(l.eta_b * l.eta_ph_mzi, 4.0 * n);
    case Architecture::Hybrid:
      return std::pow(std::pow(l.eta_w, 3) * std::pow(l.eta_b * l.eta_ph, 4), n);
    case Architecture::FullPol: return std::pow(l.eta_p * std::pow(l.eta_w, 4), 2.0 * n);
  }
  throw Error(ErrorCode::Internal, "unreachable architecture");
}

std::string transmission_formula(Architecture arch) {
  switch (arch) {
    case Architecture::Mzi: return "(eta_b*eta_ph_mzi)^(4n)";
    case Architecture::Hybrid: return "[eta_w^3*(eta_b*eta_ph)^4]^n";
    case Architecture::FullPol: return "(eta_p*eta_w^4)^(2n)";
  }
  return "";
}

ResourceReport analyze(const Netlist& nl, int n, const LossModel& loss) {
  ResourceReport r;
  r.arch = nl.arch;
  r.n = n;
  const ElementCensus census = count_elements(nl);
  r.counted = census.mesh;
  r.diagonal = census.diagonal;
  r.closed_form = closed_form_counts(nl.arch, n);
  r.optical_depth = optical_depth(nl);
  r.expected_depth = expected_optical_depth(nl.arch, n);
  r.formula = transmission_formula(nl.arch);
  r.transmission_formula_value = transmission_closed_form(nl.arch, n, loss);
  r.transmission_simulated = transmission(nl, loss).worst_case;
  r.counts_match = drop_zero(r.counted) == drop_zero(r.closed_form);
  r.depth_match = r.optical_depth == r.expected_depth;
  r.match = r.counts_match && r.depth_match;
  r.transmission_match = std::abs(r.transmission_simulated - r.transmission_formula_value) <=
                         1e-12 * r.transmission_formula_value;
  return r;
}

ComparisonReport compare_report(int n, const LossModel& loss) {
  check_n(n);
  loss.validate();
  ComparisonReport rep;
  rep.n = n;
  rep.loss = loss;
  const ComplexMatrix u = random_haar_unitary(2 * n, 0x5eed0000u + static_cast<unsigned>(n));
  for (Architecture a : {Architecture::Mzi, Architecture::Hybrid, Architecture::FullPol}) {
    rep.rows.push_back(analyze(compile(u, a), n, loss));
  }
  std::ostringstream note;
  note << "cosine-sine scheme (path x 2 internal modes), reference figures only: optical depth "
       << "between " << n << " and " << 2 * n << "; 6 CS blocks with depth 5 at n=4";
  rep.reference_note = note.str();
  return rep;
}

std::string to_markdown(const std::vector<ComparisonReport>& reports) {
  std::ostringstream os;
  os << "| n | architecture | counted | closed form | depth | expected depth | transmission "
        "formula | formula value | simulated | counts match | depth match | transmission match |\n";
  os << "|---|---|---|---|---|---|---|---|---|---|---|---|\n";
  os << std::setprecision(12);
  for (const auto& rep : reports) {
    for (const auto& r : rep.rows) {
      os << "| " << r.n << " | " << to_string(r.arch) << " | " << format_counts(r.counted)
         << " | " << format_counts(r.closed_form) << " | " << r.optical_depth << " | "
         << r.expected_depth << " | `" << r.formula << "` | " << r.transmission_formula_value
         << " | " << r.transmission_simulated << " | " << (r.counts_match ? "yes" : "no") << " | "
         << (r.depth_match ? "yes" : "no") << " | "
         << (r.transmission_match ? "yes" : "no") << " |\n";
    }
  }
  for (const auto& rep : reports) os << "\n- n=" << rep.n << ": " << rep.reference_note;
  os << "\n";
  return os.str();
}

}  // namespace photomesh
