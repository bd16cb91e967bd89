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

// Command-line front end. Talks to the library only through the C API.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "photomesh/photomesh.h"

namespace {

constexpr int kExitInput = PMESH_INPUT_ERROR;

struct CString {
  char* p = nullptr;
  ~CString() { pmesh_string_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

using MatrixPtr = std::unique_ptr<pmesh_matrix, decltype(&pmesh_matrix_free)>;
using NetlistPtr = std::unique_ptr<pmesh_netlist, decltype(&pmesh_netlist_free)>;

int report(pmesh_status s) {
  std::cerr << "error: " << pmesh_last_error() << "\n";
  return static_cast<int>(s);
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << text;
  return static_cast<bool>(out.flush());
}

int io_error(const std::string& what, const std::string& path) {
  std::cerr << "error: cannot " << what << " '" << path << "'\n";
  return kExitInput;
}

int load_matrix(const std::string& path, MatrixPtr& out) {
  const auto text = read_file(path);
  if (!text) return io_error("read", path);
  pmesh_matrix* m = nullptr;
  if (auto s = pmesh_matrix_from_json(text->c_str(), &m); s != PMESH_OK) return report(s);
  out.reset(m);
  return 0;
}

int load_netlist(const std::string& path, NetlistPtr& out) {
  const auto text = read_file(path);
  if (!text) return io_error("read", path);
  pmesh_netlist* nl = nullptr;
  if (auto s = pmesh_netlist_from_json(text->c_str(), &nl); s != PMESH_OK) return report(s);
  out.reset(nl);
  return 0;
}

// Census keys in the order they are printed.
const std::vector<std::string> kCensusOrder = {"MZI", "PDBS", "PBS", "HWP", "combined",
                                               "WavePlate", "BalancedBS", "PhaseShifter"};

std::string format_census(const nlohmann::json& mesh) {
  std::string s;
  std::vector<std::string> keys = kCensusOrder;
  for (const auto& [k, v] : mesh.items()) {
    if (std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(k);
  }
  for (const auto& k : keys) {
    if (!mesh.contains(k)) continue;
    s += (s.empty() ? "" : ", ") + k + " " + std::to_string(mesh[k].get<int>());
  }
  return s;
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

int cmd_gen(int dim, std::uint64_t seed, const std::string& out) {
  pmesh_matrix* m = nullptr;
  if (auto s = pmesh_matrix_haar(dim, seed, &m); s != PMESH_OK) return report(s);
  MatrixPtr hold(m, pmesh_matrix_free);
  CString text;
  if (auto s = pmesh_matrix_to_json(m, &text.p); s != PMESH_OK) return report(s);
  if (!write_file(out, text.str())) return io_error("write", out);
  return 0;
}

int cmd_compile(const std::string& in, const std::string& arch, const std::string& out, double tol) {
  MatrixPtr u(nullptr, pmesh_matrix_free);
  if (int rc = load_matrix(in, u)) return rc;
  pmesh_netlist* raw = nullptr;
  if (auto s = pmesh_compile(u.get(), arch.c_str(), 1e-10, &raw); s != PMESH_OK) return report(s);
  NetlistPtr nl(raw, pmesh_netlist_free);

  CString text, census_text;
  if (auto s = pmesh_netlist_to_json(nl.get(), &text.p); s != PMESH_OK) return report(s);
  if (!write_file(out, text.str())) return io_error("write", out);
  if (auto s = pmesh_netlist_census_json(nl.get(), &census_text.p); s != PMESH_OK) return report(s);
  int depth = 0;
  if (auto s = pmesh_netlist_depth(nl.get(), &depth); s != PMESH_OK) return report(s);
  pmesh_report rep{};
  const pmesh_status vs = pmesh_verify(nl.get(), u.get(), tol, &rep, nullptr);
  if (vs != PMESH_OK && vs != PMESH_VERIFY_FAILED) return report(vs);

  const auto census = nlohmann::json::parse(census_text.str());
  const int dim = pmesh_netlist_dim(nl.get());
  std::cout << "architecture: " << pmesh_netlist_architecture(nl.get()) << "\n"
            << "dimension: " << dim << "\n"
            << "rotations: " << dim * (dim - 1) / 2 << "\n"
            << "census: {" << format_census(census["mesh"]) << "}\n"
            << "diagonal stage: {" << format_census(census["diagonal"]) << "}\n";
  if (arch == "mzi") {
    std::cout << "summary: " << census["mesh"].value("MZI", 0) << " MZIs, depth " << depth << "\n";
  } else {
    std::cout << "summary: census {" << format_census(census["mesh"]) << "}, depth " << depth << "\n";
  }
  std::cout << "phase-invariant error: " << sci(rep.phase_invariant_error) << " (tol "
            << sci(tol) << ") " << (rep.pass ? "PASS" : "FAIL") << "\n";
  return rep.pass ? 0 : PMESH_VERIFY_FAILED;
}

int cmd_verify(const std::string& netlist, const std::string& against, double tol) {
  NetlistPtr nl(nullptr, pmesh_netlist_free);
  if (int rc = load_netlist(netlist, nl)) return rc;
  MatrixPtr u(nullptr, pmesh_matrix_free);
  if (int rc = load_matrix(against, u)) return rc;
  pmesh_report rep{};
  CString json;
  const pmesh_status s = pmesh_verify(nl.get(), u.get(), tol, &rep, &json.p);
  if (s != PMESH_OK && s != PMESH_VERIFY_FAILED) return report(s);
  std::cout << json.str();
  return static_cast<int>(s);
}

int cmd_analyze(const std::string& range, const std::vector<double>& eta, const std::string& format) {
  int lo = 0, hi = 0;
  char tail = 0;
  if (std::sscanf(range.c_str(), "%d..%d%c", &lo, &hi, &tail) != 2) {
    std::cerr << "error: --dim-range must look like A..B\n";
    return kExitInput;
  }
  pmesh_loss loss{1, 1, 1, 1, 1};
  if (!eta.empty()) {
    if (eta.size() != 5) {
      std::cerr << "error: --loss takes five values eta_b,eta_p,eta_w,eta_ph_mzi,eta_ph\n";
      return kExitInput;
    }
    loss = {eta[0], eta[1], eta[2], eta[3], eta[4]};
  }
  CString out;
  if (auto s = pmesh_analyze(lo, hi, &loss, format.c_str(), &out.p); s != PMESH_OK) return report(s);
  std::cout << out.str();
  return 0;
}

int cmd_diagram(const std::string& netlist, const std::string& out, bool ascii) {
  NetlistPtr nl(nullptr, pmesh_netlist_free);
  if (int rc = load_netlist(netlist, nl)) return rc;
  CString text;
  if (auto s = pmesh_netlist_render(nl.get(), ascii ? "ascii" : "svg", &text.p); s != PMESH_OK) {
    return report(s);
  }
  if (ascii && out.empty()) {
    std::cout << text.str();
    return 0;
  }
  if (out.empty()) {
    std::cerr << "error: give --out FILE.svg or --ascii\n";
    return kExitInput;
  }
  if (!write_file(out, text.str())) return io_error("write", out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"photomesh: compile unitaries onto photonic meshes"};
  app.require_subcommand(1);
  int rc = 0;

  auto* gen = app.add_subcommand("gen", "write a Haar-random unitary");
  int dim = 0;
  std::uint64_t seed = 0;
  std::string gen_out;
  gen->add_option("--dim", dim, "matrix dimension")->required()->check(CLI::PositiveNumber);
  gen->add_option("--seed", seed, "random seed")->required();
  gen->add_option("--out", gen_out, "output matrix file")->required();
  gen->callback([&] { rc = cmd_gen(dim, seed, gen_out); });

  auto* comp = app.add_subcommand("compile", "compile a unitary into a netlist");
  std::string comp_in, comp_arch, comp_out;
  double comp_tol = 1e-9;
  comp->add_option("--in", comp_in, "input matrix file")->required();
  comp->add_option("--arch", comp_arch, "mzi, hybrid or fullpol")
      ->required()
      ->check(CLI::IsMember({"mzi", "hybrid", "fullpol"}));
  comp->add_option("--out", comp_out, "output netlist file")->required();
  comp->add_option("--tol", comp_tol, "verification tolerance")->check(CLI::PositiveNumber);
  comp->callback([&] { rc = cmd_compile(comp_in, comp_arch, comp_out, comp_tol); });

  auto* ver = app.add_subcommand("verify", "check a netlist against a unitary");
  std::string ver_nl, ver_against;
  double ver_tol = 1e-9;
  ver->add_option("--netlist", ver_nl, "netlist file")->required();
  ver->add_option("--against", ver_against, "target matrix file")->required();
  ver->add_option("--tol", ver_tol, "tolerance")->check(CLI::PositiveNumber);
  ver->callback([&] { rc = cmd_verify(ver_nl, ver_against, ver_tol); });

  auto* ana = app.add_subcommand("analyze", "resource and loss comparison over a range of n");
  std::string range;
  std::vector<double> eta;
  std::string format = "json";
  ana->add_option("--dim-range", range, "path-count range A..B")->required();
  ana->add_option("--loss", eta, "eta_b,eta_p,eta_w,eta_ph_mzi,eta_ph")->delimiter(',');
  ana->add_option("--format", format, "json or md")->check(CLI::IsMember({"json", "md"}));
  ana->callback([&] { rc = cmd_analyze(range, eta, format); });

  auto* dia = app.add_subcommand("diagram", "render a netlist");
  std::string dia_nl, dia_out;
  bool ascii = false;
  dia->add_option("--netlist", dia_nl, "netlist file")->required();
  dia->add_option("--out", dia_out, "SVG output file");
  dia->add_flag("--ascii", ascii, "print an ASCII layout instead");
  dia->callback([&] { rc = cmd_diagram(dia_nl, dia_out, ascii); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }
  return rc;
}
