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

#include <catch_amalgamated.hpp>

#include <cmath>
#include <string>

#include "photomesh/photomesh.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  pmesh_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("matrix handles") {
  pmesh_matrix* m = nullptr;
  REQUIRE(pmesh_matrix_haar(4, 42, &m) == PMESH_OK);
  CHECK(pmesh_matrix_dim(m) == 4);
  double re = 0, im = 0;
  CHECK(pmesh_matrix_get(m, 1, 2, &re, &im) == PMESH_OK);
  CHECK(std::isfinite(re));
  CHECK(pmesh_matrix_get(m, 4, 0, &re, &im) == PMESH_INPUT_ERROR);
  CHECK(std::string(pmesh_last_error()).find("range") != std::string::npos);

  char* text = nullptr;
  REQUIRE(pmesh_matrix_to_json(m, &text) == PMESH_OK);
  const std::string json = take(text);
  pmesh_matrix* back = nullptr;
  REQUIRE(pmesh_matrix_from_json(json.c_str(), &back) == PMESH_OK);
  double re2 = 0, im2 = 0;
  pmesh_matrix_get(back, 1, 2, &re2, &im2);
  CHECK(re == re2);
  CHECK(im == im2);
  pmesh_matrix_free(back);
  pmesh_matrix_free(m);
  pmesh_matrix_free(nullptr);

  CHECK(pmesh_matrix_from_json("{oops", &back) == PMESH_INPUT_ERROR);
  CHECK(std::string(pmesh_last_error()).find("parse") != std::string::npos);
  CHECK(pmesh_matrix_haar(0, 1, &m) == PMESH_INPUT_ERROR);
}

TEST_CASE("compile, verify and inspect") {
  pmesh_matrix* u = nullptr;
  pmesh_matrix_haar(6, 42, &u);
  pmesh_netlist* nl = nullptr;
  REQUIRE(pmesh_compile(u, "fullpol", 1e-10, &nl) == PMESH_OK);
  CHECK(std::string(pmesh_netlist_architecture(nl)) == "fullpol");
  CHECK(pmesh_netlist_dim(nl) == 6);
  int depth = 0;
  CHECK(pmesh_netlist_depth(nl, &depth) == PMESH_OK);
  CHECK(depth == 3);
  char* census = nullptr;
  REQUIRE(pmesh_netlist_census_json(nl, &census) == PMESH_OK);
  const std::string c = take(census);
  CHECK(c.find("\"PBS\": 30") != std::string::npos);
  CHECK(c.find("\"HWP\": 36") != std::string::npos);
  CHECK(c.find("\"combined\": 15") != std::string::npos);

  pmesh_report rep{};
  char* json = nullptr;
  CHECK(pmesh_verify(nl, u, 1e-9, &rep, &json) == PMESH_OK);
  CHECK(rep.pass == 1);
  CHECK(rep.phase_invariant_error < 1e-10);
  CHECK(take(json).find("\"pass\": true") != std::string::npos);

  pmesh_matrix* v = nullptr;
  pmesh_matrix_haar(6, 43, &v);
  CHECK(pmesh_verify(nl, v, 1e-9, &rep, nullptr) == PMESH_VERIFY_FAILED);
  CHECK(rep.pass == 0);
  pmesh_matrix* w = nullptr;
  pmesh_matrix_haar(4, 43, &w);
  CHECK(pmesh_verify(nl, w, 1e-9, &rep, nullptr) == PMESH_INPUT_ERROR);

  const pmesh_loss loss{1, 1, 0.99, 1, 1};
  double t = 0;
  CHECK(pmesh_netlist_transmission(nl, &loss, &t) == PMESH_OK);
  CHECK(t == Catch::Approx(std::pow(0.99, 24)).epsilon(1e-12));

  char* svg = nullptr;
  CHECK(pmesh_netlist_render(nl, "svg", &svg) == PMESH_OK);
  CHECK(take(svg).find("<svg") == 0);
  char* bad = nullptr;
  CHECK(pmesh_netlist_render(nl, "png", &bad) == PMESH_INPUT_ERROR);

  char* text = nullptr;
  REQUIRE(pmesh_netlist_to_json(nl, &text) == PMESH_OK);
  const std::string js = take(text);
  pmesh_netlist* back = nullptr;
  REQUIRE(pmesh_netlist_from_json(js.c_str(), &back) == PMESH_OK);
  CHECK(pmesh_verify(back, u, 1e-9, &rep, nullptr) == PMESH_OK);

  pmesh_netlist_free(back);
  pmesh_netlist_free(nl);
  pmesh_matrix_free(u);
  pmesh_matrix_free(v);
  pmesh_matrix_free(w);
}

TEST_CASE("status codes") {
  pmesh_matrix* u = nullptr;
  pmesh_matrix_haar(5, 1, &u);
  pmesh_netlist* nl = nullptr;
  CHECK(pmesh_compile(u, "hybrid", 1e-10, &nl) == PMESH_UNSUPPORTED_DIMENSION);
  CHECK(std::string(pmesh_last_error()).find("even dimension") != std::string::npos);
  CHECK(pmesh_compile(u, "warp", 1e-10, &nl) == PMESH_INPUT_ERROR);
  pmesh_matrix_free(u);

  pmesh_matrix* m = nullptr;
  REQUIRE(pmesh_matrix_from_json("{\"dim\": 2, \"entries\": [[[1,0],[1,0]],[[0,0],[1,0]]]}", &m) == PMESH_OK);
  CHECK(pmesh_compile(m, "mzi", 1e-10, &nl) == PMESH_NON_UNITARY);
  CHECK(std::string(pmesh_last_error()).find("residual") != std::string::npos);
  pmesh_matrix_free(m);

  CHECK(pmesh_netlist_from_json("{\"version\": \"netlist-v1\"}", &nl) == PMESH_INPUT_ERROR);
  CHECK(pmesh_compile(nullptr, "mzi", 1e-10, &nl) == PMESH_INPUT_ERROR);
}

TEST_CASE("analyze") {
  const pmesh_loss ones{1, 1, 1, 1, 1};
  char* out = nullptr;
  REQUIRE(pmesh_analyze(1, 2, &ones, "json", &out) == PMESH_OK);
  CHECK(take(out).find("\"reports\"") != std::string::npos);
  REQUIRE(pmesh_analyze(3, 3, &ones, "md", &out) == PMESH_OK);
  CHECK(take(out).find("| 3 | fullpol |") != std::string::npos);
  CHECK(pmesh_analyze(2, 1, &ones, "json", &out) == PMESH_INPUT_ERROR);
  const pmesh_loss bad{1, 1, 1.5, 1, 1};
  CHECK(pmesh_analyze(1, 1, &bad, "json", &out) == PMESH_INPUT_ERROR);
  CHECK(std::string(pmesh_version()) == "1.0.0");
}
