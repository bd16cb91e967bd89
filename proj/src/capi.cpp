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

#include "photomesh/photomesh.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "photomesh/compiler.hpp"
#include "photomesh/diagram.hpp"
#include "photomesh/error.hpp"
#include "photomesh/json_io.hpp"
#include "photomesh/resources.hpp"
#include "photomesh/simulator.hpp"

struct pmesh_matrix {
  photomesh::ComplexMatrix m;
};

struct pmesh_netlist {
  photomesh::Netlist nl;
  std::string arch_name;
};

namespace {

using namespace photomesh;

thread_local std::string g_last_error;

pmesh_status status_of(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::IndexError:
    case ErrorCode::ParseError:
    case ErrorCode::InvalidNetlist: return PMESH_INPUT_ERROR;
    case ErrorCode::UnsupportedDimension: return PMESH_UNSUPPORTED_DIMENSION;
    case ErrorCode::NonUnitary: return PMESH_NON_UNITARY;
    case ErrorCode::SchedulingInfeasible:
    case ErrorCode::UnknownElement:
    case ErrorCode::Internal: return PMESH_INTERNAL;
  }
  return PMESH_INTERNAL;
}

pmesh_status fail(pmesh_status s, std::string msg) {
  g_last_error = std::move(msg);
  return s;
}

template <class F>
pmesh_status guard(F&& f) {
  try {
    g_last_error.clear();
    return f();
  } catch (const Error& e) {
    return fail(status_of(e.code()), std::string(to_string(e.code())) + ": " + e.what());
  } catch (const std::bad_alloc&) {
    return fail(PMESH_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PMESH_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

LossModel loss_of(const pmesh_loss* l) {
  if (!l) return {};
  LossModel m{l->eta_b, l->eta_p, l->eta_w, l->eta_ph_mzi, l->eta_ph};
  m.validate();
  return m;
}

pmesh_netlist* wrap(Netlist nl) {
  auto* h = new pmesh_netlist{std::move(nl), {}};
  h->arch_name = std::string(to_string(h->nl.arch));
  return h;
}

#define PMESH_REQUIRE(cond, msg) \
  if (!(cond)) return fail(PMESH_INPUT_ERROR, msg)

}  // namespace

extern "C" {

const char* pmesh_version(void) { return "1.0.0"; }

const char* pmesh_last_error(void) { return g_last_error.c_str(); }

void pmesh_string_free(char* s) { std::free(s); }

pmesh_status pmesh_matrix_haar(int dim, uint64_t seed, pmesh_matrix** out) {
  PMESH_REQUIRE(out, "null output pointer");
  return guard([&] {
    *out = new pmesh_matrix{random_haar_unitary(dim, seed)};
    return PMESH_OK;
  });
}

pmesh_status pmesh_matrix_from_json(const char* text, pmesh_matrix** out) {
  PMESH_REQUIRE(text && out, "null argument");
  return guard([&] {
    *out = new pmesh_matrix{io::matrix_from_json(text)};
    return PMESH_OK;
  });
}

pmesh_status pmesh_matrix_to_json(const pmesh_matrix* m, char** out) {
  PMESH_REQUIRE(m && out, "null argument");
  return guard([&] {
    *out = dup(io::matrix_to_json(m->m));
    return PMESH_OK;
  });
}

int pmesh_matrix_dim(const pmesh_matrix* m) { return m ? static_cast<int>(m->m.rows()) : -1; }

pmesh_status pmesh_matrix_get(const pmesh_matrix* m, int row, int col, double* re, double* im) {
  PMESH_REQUIRE(m && re && im, "null argument");
  PMESH_REQUIRE(row >= 0 && col >= 0 && row < m->m.rows() && col < m->m.cols(), "index out of range");
  *re = m->m(row, col).real();
  *im = m->m(row, col).imag();
  return PMESH_OK;
}

void pmesh_matrix_free(pmesh_matrix* m) { delete m; }

pmesh_status pmesh_compile(const pmesh_matrix* u, const char* arch, double tol, pmesh_netlist** out) {
  PMESH_REQUIRE(u && arch && out, "null argument");
  return guard([&] {
    *out = wrap(compile(u->m, architecture_from_string(arch), tol));
    return PMESH_OK;
  });
}

pmesh_status pmesh_netlist_from_json(const char* text, pmesh_netlist** out) {
  PMESH_REQUIRE(text && out, "null argument");
  return guard([&] {
    *out = wrap(io::netlist_from_json(text));
    return PMESH_OK;
  });
}

pmesh_status pmesh_netlist_to_json(const pmesh_netlist* nl, char** out) {
  PMESH_REQUIRE(nl && out, "null argument");
  return guard([&] {
    *out = dup(io::netlist_to_json(nl->nl));
    return PMESH_OK;
  });
}

int pmesh_netlist_dim(const pmesh_netlist* nl) { return nl ? nl->nl.dim : -1; }

const char* pmesh_netlist_architecture(const pmesh_netlist* nl) {
  return nl ? nl->arch_name.c_str() : "";
}

pmesh_status pmesh_netlist_census_json(const pmesh_netlist* nl, char** out) {
  PMESH_REQUIRE(nl && out, "null argument");
  return guard([&] {
    const ElementCensus c = count_elements(nl->nl);
    std::string s = "{\"mesh\": {";
    auto emit = [&s](const ElementCounts& m) {
      bool first = true;
      for (const auto& [k, v] : m) {
        s += (first ? "\"" : ", \"") + k + "\": " + std::to_string(v);
        first = false;
      }
    };
    emit(c.mesh);
    s += "}, \"diagonal\": {";
    emit(c.diagonal);
    s += "}}";
    *out = dup(s);
    return PMESH_OK;
  });
}

pmesh_status pmesh_netlist_depth(const pmesh_netlist* nl, int* out) {
  PMESH_REQUIRE(nl && out, "null argument");
  return guard([&] {
    *out = optical_depth(nl->nl);
    return PMESH_OK;
  });
}

pmesh_status pmesh_netlist_transmission(const pmesh_netlist* nl, const pmesh_loss* loss,
                                        double* worst_case) {
  PMESH_REQUIRE(nl && worst_case, "null argument");
  return guard([&] {
    *worst_case = transmission(nl->nl, loss_of(loss)).worst_case;
    return PMESH_OK;
  });
}

pmesh_status pmesh_netlist_render(const pmesh_netlist* nl, const char* format, char** out) {
  PMESH_REQUIRE(nl && format && out, "null argument");
  return guard([&] {
    const std::string f = format;
    if (f == "ascii") *out = dup(render_ascii(nl->nl));
    else if (f == "svg") *out = dup(render_svg(nl->nl));
    else return fail(PMESH_INPUT_ERROR, "format must be ascii or svg");
    return PMESH_OK;
  });
}

void pmesh_netlist_free(pmesh_netlist* nl) { delete nl; }

pmesh_status pmesh_verify(const pmesh_netlist* nl, const pmesh_matrix* target, double tol,
                          pmesh_report* out, char** json) {
  PMESH_REQUIRE(nl && target && out, "null argument");
  return guard([&] {
    if (target->m.rows() != nl->nl.dim) {
      return fail(PMESH_INPUT_ERROR, "target dimension " + std::to_string(target->m.rows()) +
                                         " does not match netlist dimension " +
                                         std::to_string(nl->nl.dim));
    }
    const VerificationReport r = verify(nl->nl, target->m, tol);
    *out = {r.frobenius_error, r.phase_invariant_error, r.global_phase, r.pass ? 1 : 0};
    if (json) *json = dup(io::report_to_json(r, transmission(nl->nl, LossModel{})));
    return r.pass ? PMESH_OK : PMESH_VERIFY_FAILED;
  });
}

pmesh_status pmesh_analyze(int n_min, int n_max, const pmesh_loss* loss, const char* format,
                           char** out) {
  PMESH_REQUIRE(format && out, "null argument");
  PMESH_REQUIRE(n_min >= 1 && n_max >= n_min, "n range must satisfy 1 <= min <= max");
  return guard([&] {
    const LossModel l = loss_of(loss);
    std::vector<ComparisonReport> reps;
    for (int n = n_min; n <= n_max; ++n) reps.push_back(compare_report(n, l));
    const std::string f = format;
    if (f == "json") *out = dup(io::comparison_to_json(reps));
    else if (f == "md") *out = dup(to_markdown(reps));
    else return fail(PMESH_INPUT_ERROR, "format must be json or md");
    return PMESH_OK;
  });
}

}  // extern "C"
