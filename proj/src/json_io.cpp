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

#include "photomesh/json_io.hpp"

#include <cmath>
#include "json.hpp"

#include "photomesh/error.hpp"

namespace photomesh::io {

using nlohmann::json;

namespace {

constexpr int kIndent = 2;

json parse(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed JSON: ") + e.what());
  }
}

// Wraps field access so nlohmann type/out-of-range errors surface as ParseError.
template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string(what) + ": " + e.what());
  }
}

double finite(const json& j) {
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw Error(ErrorCode::ParseError, "non-finite number");
  return v;
}

Polarization pol_from(const json& j) {
  const auto s = j.get<std::string>();
  if (s == "h") return Polarization::H;
  if (s == "v") return Polarization::V;
  throw Error(ErrorCode::ParseError, "polarization must be \"h\" or \"v\", got '" + s + "'");
}

PlateKind plate_kind_from(const json& j) {
  const auto s = j.get<std::string>();
  if (s == "HWP") return PlateKind::HWP;
  if (s == "QWP") return PlateKind::QWP;
  throw Error(ErrorCode::ParseError, "unknown plate kind '" + s + "'");
}

json rotation_json(const RotationParams& r) { return {{"m", r.m}, {"theta", r.theta}, {"phi", r.phi}}; }

RotationParams rotation_from(const json& j) {
  return RotationParams::make(j.at("m").get<int>(), finite(j.at("theta")), finite(j.at("phi")));
}

json plate_json(const WavePlate& p) {
  return {{"kind", p.kind == PlateKind::HWP ? "HWP" : "QWP"}, {"orientation", p.orientation}};
}

WavePlate plate_from(const json& j) {
  return WavePlate::make(plate_kind_from(j.at("kind")), finite(j.at("orientation")));
}

json gadget_json(const PolarizationGadget& g) {
  json plates = json::array();
  for (const auto& p : g.plates) plates.push_back(plate_json(p));
  return {{"plates", plates}, {"global_phase", g.global_phase}};
}

PolarizationGadget gadget_from(const json& j) {
  PolarizationGadget g;
  for (const auto& p : j.at("plates")) g.plates.push_back(plate_from(p));
  g.global_phase = finite(j.at("global_phase"));
  return g;
}

json encoding_json(const ModeEncoding& enc) {
  json map = json::array();
  for (int j = 0; j < enc.dim(); ++j) {
    const auto& m = enc.physical(j);
    map.push_back({{"logical", j}, {"path", m.path}, {"pol", to_string(m.pol)}});
  }
  return {{"kind", to_string(enc.kind())}, {"n", enc.paths()}, {"map", map}};
}

ModeEncoding encoding_from(const json& j) {
  const auto kind_s = j.at("kind").get<std::string>();
  EncodingKind kind;
  if (kind_s == "hybrid") kind = EncodingKind::Hybrid;
  else if (kind_s == "fullpol") kind = EncodingKind::FullPol;
  else throw Error(ErrorCode::ParseError, "unknown encoding kind '" + kind_s + "'");
  const int n = j.at("n").get<int>();
  const auto& entries = j.at("map");
  if (n < 1 || entries.size() != static_cast<std::size_t>(2 * n)) {
    throw Error(ErrorCode::ParseError, "encoding map must have 2n entries");
  }
  std::vector<PhysicalMode> map(2 * n);
  std::vector<bool> seen(2 * n, false);
  for (const auto& e : entries) {
    const int l = e.at("logical").get<int>();
    if (l < 0 || l >= 2 * n || seen[l]) throw Error(ErrorCode::ParseError, "bad logical index in encoding");
    seen[l] = true;
    map[l] = {e.at("path").get<int>(), pol_from(e.at("pol"))};
  }
  try {
    return ModeEncoding(kind, n, std::move(map));
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

json element_json(const Element& e) {
  json j = std::visit(
      [](const auto& el) -> json {
        using T = std::decay_t<decltype(el)>;
        if constexpr (std::is_same_v<T, Mzi>) {
          return {{"p", el.p}, {"q", el.q}, {"theta", el.theta}, {"phi", el.phi}};
        } else if constexpr (std::is_same_v<T, BalancedBS> || std::is_same_v<T, Pbs>) {
          return {{"p", el.p}, {"q", el.q}};
        } else if constexpr (std::is_same_v<T, PhaseShifter>) {
          return {{"path", el.path}, {"phase", el.phase},
                  {"pol", el.pol ? json(to_string(*el.pol)) : json(nullptr)}};
        } else if constexpr (std::is_same_v<T, WavePlateElem>) {
          json w = plate_json(el.plate);
          w["path"] = el.path;
          return w;
        } else if constexpr (std::is_same_v<T, CombinedRotation>) {
          json w = gadget_json(el.gadget);
          w["path"] = el.path;
          return w;
        } else if constexpr (std::is_same_v<T, Pdbs>) {
          return {{"p", el.p}, {"q", el.q}, {"active", to_string(el.active)},
                  {"theta", el.theta}, {"phi", el.phi}};
        } else {
          return {{"phases", el.phases}};
        }
      },
      e);
  j["variant"] = element_name(e);
  return j;
}

Element element_from(const json& j) {
  const auto v = j.at("variant").get<std::string>();
  if (v == "MZI") {
    return Mzi{j.at("p").get<int>(), j.at("q").get<int>(), finite(j.at("theta")), finite(j.at("phi"))};
  }
  if (v == "BalancedBS") return BalancedBS{j.at("p").get<int>(), j.at("q").get<int>()};
  if (v == "PBS") return Pbs{j.at("p").get<int>(), j.at("q").get<int>()};
  if (v == "PhaseShifter") {
    PhaseShifter ps{j.at("path").get<int>(), finite(j.at("phase")), std::nullopt};
    if (j.contains("pol") && !j.at("pol").is_null()) ps.pol = pol_from(j.at("pol"));
    return ps;
  }
  if (v == "WavePlate") return WavePlateElem{j.at("path").get<int>(), plate_from(j)};
  if (v == "CombinedRotation") return CombinedRotation{j.at("path").get<int>(), gadget_from(j)};
  if (v == "PDBS") {
    return Pdbs{j.at("p").get<int>(), j.at("q").get<int>(), pol_from(j.at("active")),
                finite(j.at("theta")), finite(j.at("phi"))};
  }
  if (v == "DiagonalPhases") {
    DiagonalPhases d;
    for (const auto& x : j.at("phases")) d.phases.push_back(finite(x));
    return d;
  }
  throw Error(ErrorCode::UnknownElement, "unknown element variant '" + v + "'");
}

json ports_json(const std::vector<Port>& ports) {
  json a = json::array();
  for (const auto& p : ports) a.push_back({{"path", p.path}, {"pol", to_string(p.pol)}});
  return a;
}

std::vector<Port> ports_from(const json& j) {
  std::vector<Port> out;
  for (const auto& p : j) out.push_back({p.at("path").get<int>(), pol_from(p.at("pol"))});
  return out;
}

json counts_json(const ElementCounts& c) {
  json o = json::object();
  for (const auto& [k, v] : c) o[k] = v;
  return o;
}

}  // namespace

std::string matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(row);
  }
  return json{{"dim", m.rows()}, {"entries", rows}}.dump(kIndent) + "\n";
}

ComplexMatrix matrix_from_json(std::string_view text) {
  const json j = parse(text);
  return guarded("matrix file", [&] {
    const int dim = j.at("dim").get<int>();
    const auto& rows = j.at("entries");
    if (dim < 1 || !rows.is_array() || rows.size() != static_cast<std::size_t>(dim)) {
      throw Error(ErrorCode::ParseError, "matrix dim does not match entries");
    }
    ComplexMatrix m(dim, dim);
    for (int r = 0; r < dim; ++r) {
      const auto& row = rows.at(r);
      if (!row.is_array() || row.size() != static_cast<std::size_t>(dim)) {
        throw Error(ErrorCode::ParseError, "matrix row " + std::to_string(r) + " has wrong length");
      }
      for (int c = 0; c < dim; ++c) {
        const auto& z = row.at(c);
        if (!z.is_array() || z.size() != 2) throw Error(ErrorCode::ParseError, "entry must be [re, im]");
        m(r, c) = Complex(finite(z.at(0)), finite(z.at(1)));
      }
    }
    return m;
  });
}

std::string plan_to_json(const DecompositionPlan& plan) {
  json rots = json::array();
  for (const auto& r : plan.rotations) rots.push_back(rotation_json(r));
  return json{{"dim", plan.dim}, {"rotations", rots}, {"diagonal", plan.diagonal}}.dump(kIndent) + "\n";
}

DecompositionPlan plan_from_json(std::string_view text) {
  const json j = parse(text);
  return guarded("plan", [&] {
    DecompositionPlan p;
    p.dim = j.at("dim").get<int>();
    for (const auto& r : j.at("rotations")) p.rotations.push_back(rotation_from(r));
    for (const auto& a : j.at("diagonal")) p.diagonal.push_back(finite(a));
    if (p.dim < 1 || p.diagonal.size() != static_cast<std::size_t>(p.dim)) {
      throw Error(ErrorCode::ParseError, "plan diagonal must have dim entries");
    }
    return p;
  });
}

std::string schedule_to_json(const LayerSchedule& sched) {
  json cols = json::array();
  for (const auto& c : sched.columns) {
    json ops = json::array();
    for (const auto& r : c.ops) ops.push_back(rotation_json(r));
    cols.push_back({{"kind", c.kind == LayerKind::Omega1 ? "O1" : "O2"}, {"ops", ops}});
  }
  return json{{"dim", sched.dim}, {"columns", cols}}.dump(kIndent) + "\n";
}

LayerSchedule schedule_from_json(std::string_view text) {
  const json j = parse(text);
  return guarded("schedule", [&] {
    LayerSchedule s;
    s.dim = j.at("dim").get<int>();
    for (const auto& c : j.at("columns")) {
      LayerColumn col;
      const auto k = c.at("kind").get<std::string>();
      if (k == "O1") col.kind = LayerKind::Omega1;
      else if (k == "O2") col.kind = LayerKind::Omega2;
      else throw Error(ErrorCode::ParseError, "column kind must be O1 or O2");
      for (const auto& r : c.at("ops")) col.ops.push_back(rotation_from(r));
      s.columns.push_back(std::move(col));
    }
    return s;
  });
}

std::string encoding_to_json(const ModeEncoding& enc) { return encoding_json(enc).dump(kIndent) + "\n"; }

ModeEncoding encoding_from_json(std::string_view text) {
  const json j = parse(text);
  return guarded("encoding", [&] { return encoding_from(j); });
}

std::string gadget_to_json(const PolarizationGadget& g) { return gadget_json(g).dump(kIndent) + "\n"; }

PolarizationGadget gadget_from_json(std::string_view text) {
  const json j = parse(text);
  return guarded("gadget", [&] { return gadget_from(j); });
}

std::string netlist_to_json(const Netlist& nl) {
  json info = json::array();
  json stages = json::array();
  for (const auto& s : nl.stages) {
    info.push_back({{"role", to_string(s.role)},
                    {"layer", s.layer},
                    {"interferometric", s.interferometric},
                    {"block", s.block}});
    json elems = json::array();
    for (const auto& e : s.elements) elems.push_back(element_json(e));
    stages.push_back(elems);
  }
  json j{{"version", kNetlistVersion},
         {"architecture", to_string(nl.arch)},
         {"dim", nl.dim},
         {"spatial_paths", nl.spatial_paths},
         {"polarized", nl.polarized},
         {"encoding", nl.encoding ? encoding_json(*nl.encoding) : json(nullptr)},
         {"inputs", ports_json(nl.inputs)},
         {"outputs", ports_json(nl.outputs)},
         {"stage_info", info},
         {"stages", stages}};
  return j.dump(kIndent) + "\n";
}

Netlist netlist_from_json(std::string_view text) {
  const json j = parse(text);
  Netlist nl = guarded("netlist", [&] {
    if (j.at("version").get<std::string>() != kNetlistVersion) {
      throw Error(ErrorCode::ParseError, "unsupported netlist version");
    }
    Netlist nl;
    try {
      nl.arch = architecture_from_string(j.at("architecture").get<std::string>());
    } catch (const Error& e) {
      throw Error(ErrorCode::ParseError, e.what());
    }
    nl.dim = j.at("dim").get<int>();
    nl.spatial_paths = j.at("spatial_paths").get<int>();
    nl.polarized = j.at("polarized").get<bool>();
    if (!j.at("encoding").is_null()) nl.encoding = encoding_from(j.at("encoding"));
    nl.inputs = ports_from(j.at("inputs"));
    nl.outputs = ports_from(j.at("outputs"));
    const auto& info = j.at("stage_info");
    const auto& stages = j.at("stages");
    if (info.size() != stages.size()) throw Error(ErrorCode::ParseError, "stage_info/stages length mismatch");
    for (std::size_t i = 0; i < stages.size(); ++i) {
      Stage s;
      s.role = stage_role_from_string(info.at(i).at("role").get<std::string>());
      s.layer = info.at(i).at("layer").get<int>();
      s.interferometric = info.at(i).at("interferometric").get<bool>();
      s.block = info.at(i).at("block").get<int>();
      for (const auto& e : stages.at(i)) s.elements.push_back(element_from(e));
      nl.stages.push_back(std::move(s));
    }
    return nl;
  });
  check_netlist(nl);
  return nl;
}

std::string report_to_json(const VerificationReport& r, const Transmission& t) {
  json j{{"frobenius_error", r.frobenius_error},
         {"phase_invariant_error", r.phase_invariant_error},
         {"global_phase", r.global_phase},
         {"pass", r.pass},
         {"worst_case_transmission", t.worst_case},
         {"per_mode_transmission", t.per_mode}};
  return j.dump(kIndent) + "\n";
}

std::string comparison_to_json(const std::vector<ComparisonReport>& reports) {
  json out = json::array();
  for (const auto& rep : reports) {
    json rows = json::array();
    for (const auto& r : rep.rows) {
      rows.push_back({{"architecture", to_string(r.arch)},
                      {"counted", counts_json(r.counted)},
                      {"closed_form", counts_json(r.closed_form)},
                      {"diagonal", counts_json(r.diagonal)},
                      {"optical_depth", r.optical_depth},
                      {"expected_depth", r.expected_depth},
                      {"formula", r.formula},
                      {"transmission_formula", r.transmission_formula_value},
                      {"transmission_simulated", r.transmission_simulated},
                      {"counts_match", r.counts_match},
                      {"depth_match", r.depth_match},
                      {"match", r.match},
                      {"transmission_match", r.transmission_match}});
    }
    const auto& l = rep.loss;
    out.push_back({{"n", rep.n},
                   {"loss", {{"eta_b", l.eta_b}, {"eta_p", l.eta_p}, {"eta_w", l.eta_w},
                             {"eta_ph_mzi", l.eta_ph_mzi}, {"eta_ph", l.eta_ph}}},
                   {"rows", rows},
                   {"reference_note", rep.reference_note}});
  }
  return json{{"reports", out}}.dump(kIndent) + "\n";
}

}  // namespace photomesh::io
