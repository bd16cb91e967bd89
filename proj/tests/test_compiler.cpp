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

#include "oracles.hpp"
#include "photomesh/compiler.hpp"
#include "photomesh/error.hpp"
#include "photomesh/simulator.hpp"

using namespace photomesh;

namespace {

int count_variant(const Netlist& nl, std::string_view name, bool skip_diagonal = true) {
  int c = 0;
  for (const auto& s : nl.stages) {
    if (skip_diagonal && s.role == StageRole::Diagonal) continue;
    for (const auto& e : s.elements) c += element_name(e) == name;
  }
  return c;
}

double sim_error(const Netlist& nl, const ComplexMatrix& u) { return (netlist_unitary(nl) - u).norm(); }

}  // namespace

TEST_CASE("mzi_settings reproduce the rotation") {
  CHECK((mzi_transfer(mzi_settings(RotationParams::make(0, 0, 0))) - Matrix2c::Identity()).norm() < 1e-15);
  const Matrix2c cross = mzi_transfer(mzi_settings(RotationParams::make(0, kPi / 2, 0.3)));
  CHECK(std::abs(cross(0, 0)) < 1e-14);
  CHECK(std::abs(cross(1, 1)) < 1e-14);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> a(0, 2 * oracle::pi);
  for (int k = 0; k < 200; ++k) {
    const double t = a(rng) / 4, p = a(rng);
    const auto s = mzi_settings(RotationParams::make(0, t, p));
    CHECK(s.internal == Catch::Approx(2 * t).margin(1e-15));
    CHECK((mzi_transfer(s) - oracle::rotation(t, p)).norm() < 1e-13);
  }
}

TEST_CASE("baseline mesh") {
  const ComplexMatrix u = random_haar_unitary(6, 42);
  const Netlist nl = compile(u, Architecture::Mzi);
  CHECK(count_variant(nl, "MZI") == 15);
  CHECK(sim_error(nl, u) < 1e-10);
  const Netlist n2 = compile(random_haar_unitary(2, 1), Architecture::Mzi);
  CHECK(count_variant(n2, "MZI") == 1);
  CHECK(count_variant(n2, "DiagonalPhases", false) == 1);
  // Odd sizes are fine on the baseline.
  const ComplexMatrix u5 = random_haar_unitary(5, 5);
  CHECK(sim_error(compile(u5, Architecture::Mzi), u5) < 1e-10);
}

TEST_CASE("hybrid mesh") {
  const ComplexMatrix u = random_haar_unitary(6, 3);
  const Netlist nl = compile(u, Architecture::Hybrid);
  CHECK(count_variant(nl, "CombinedRotation") == 9);
  CHECK(count_variant(nl, "PDBS") == 6);
  CHECK(nl.spatial_paths == 3);
  CHECK(sim_error(nl, u) < 1e-10);

  const ComplexMatrix u2 = random_haar_unitary(2, 3);
  const Netlist n1 = compile(u2, Architecture::Hybrid);
  CHECK(count_variant(n1, "PDBS") == 0);
  CHECK(count_variant(n1, "CombinedRotation") == 1);
  CHECK(sim_error(n1, u2) < 1e-10);
}

TEST_CASE("full-polarization mesh") {
  const ComplexMatrix u = random_haar_unitary(6, 4);
  const Netlist nl = compile(u, Architecture::FullPol);
  CHECK(count_variant(nl, "PBS") == 30);
  CHECK(count_variant(nl, "CombinedRotation") == 15);
  int fixed_hwp = 0;
  for (const auto& s : nl.stages)
    for (const auto& e : s.elements)
      if (auto* w = std::get_if<WavePlateElem>(&e))
        fixed_hwp += w->plate.kind == PlateKind::HWP && std::abs(w->plate.orientation - kPi / 4) < 1e-15;
  CHECK(fixed_hwp == 36);
  CHECK(sim_error(nl, u) < 1e-10);

  const ComplexMatrix u2 = random_haar_unitary(2, 4);
  const Netlist n1 = compile(u2, Architecture::FullPol);
  CHECK(count_variant(n1, "PBS") == 2);
  CHECK(count_variant(n1, "CombinedRotation") == 1);
  CHECK(sim_error(n1, u2) < 1e-10);
}

TEST_CASE("full-polarization netlists use no balanced splitters or bare path phases") {
  for (int n = 1; n <= 6; ++n) {
    const Netlist nl = compile(random_haar_unitary(2 * n, n), Architecture::FullPol);
    CHECK(count_variant(nl, "BalancedBS", false) == 0);
    for (const auto& s : nl.stages)
      for (const auto& e : s.elements)
        if (auto* p = std::get_if<PhaseShifter>(&e)) CHECK(p->pol.has_value());
  }
}

TEST_CASE("all backends agree for even N up to 12") {
  for (int n : {2, 4, 6, 8, 10, 12}) {
    for (std::uint64_t s = 0; s < 3; ++s) {
      const ComplexMatrix u = random_haar_unitary(n, 31 * n + s);
      for (auto a : {Architecture::Mzi, Architecture::Hybrid, Architecture::FullPol}) {
        INFO("N=" << n << " arch=" << to_string(a));
        const Netlist nl = compile(u, a);
        check_netlist(nl);
        CHECK(sim_error(nl, u) < 1e-10);
      }
    }
  }
}

TEST_CASE("odd dimension is rejected for polarization backends") {
  const ComplexMatrix u = random_haar_unitary(5, 1);
  for (auto a : {Architecture::Hybrid, Architecture::FullPol}) {
    try {
      compile(u, a);
      FAIL("expected UnsupportedDimension");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::UnsupportedDimension);
      CHECK(std::string(e.what()).find("even dimension") != std::string::npos);
    }
  }
}

TEST_CASE("X gate is the cyclic shift") {
  for (int n = 1; n <= 6; ++n) {
    const Netlist x = xgate_netlist(n);
    const ComplexMatrix ux = netlist_unitary(x);
    CHECK((ux - oracle::cyclic_shift(2 * n)).norm() < 1e-13);
    ComplexMatrix p = ComplexMatrix::Identity(2 * n, 2 * n);
    for (int k = 0; k < 2 * n; ++k) p = ux * p;
    CHECK((p - ComplexMatrix::Identity(2 * n, 2 * n)).norm() < 1e-13);
    const ComplexMatrix uxd = netlist_unitary(xgate_dagger_netlist(n));
    CHECK((uxd * ux - ComplexMatrix::Identity(2 * n, 2 * n)).norm() < 1e-14);

    int pbs = 0, hwp = 0, other = 0;
    for (const auto& s : x.stages)
      for (const auto& e : s.elements) {
        if (std::holds_alternative<Pbs>(e)) ++pbs;
        else if (auto* w = std::get_if<WavePlateElem>(&e);
                 w && w->plate.kind == PlateKind::HWP && std::abs(w->plate.orientation - kPi / 4) < 1e-15)
          ++hwp;
        else ++other;
      }
    CHECK(pbs == 2 * n - 1);
    CHECK(hwp == 2 * n);
    CHECK(other == 0);
  }
  // n=3 explicit: logical j -> j+1 is (a,v)->(a,h)->(b,v)->...
  const ComplexMatrix u3 = netlist_unitary(xgate_netlist(3));
  for (int j = 0; j < 6; ++j) CHECK(std::abs(u3((j + 1) % 6, j) - 1.0) < 1e-15);
}

TEST_CASE("Omega2 rotations conjugated by X land on the right path") {
  const auto enc = fullpol_encoding(3);
  CHECK(conjugate_omega2(RotationParams::make(1, 0.2, 0.3), enc).path == 1);
  CHECK(conjugate_omega2(RotationParams::make(3, 0.2, 0.3), enc).path == 2);
  CHECK_THROWS_AS(conjugate_omega2(RotationParams::make(2, 0.2, 0.3), enc), Error);

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> a(0, 2 * oracle::pi);
  for (int n : {2, 3, 4}) {
    const auto e = fullpol_encoding(n);
    const oracle::M x = oracle::cyclic_shift(2 * n);
    for (int k = 0; k < 30; ++k) {
      for (int m = 1; m < 2 * n - 1; m += 2) {
        const double t = a(rng) / 4, p = a(rng);
        const auto pr = conjugate_omega2(RotationParams::make(m, t, p), e);
        oracle::M on_path = oracle::M::Identity(2 * n, 2 * n);
        on_path.block(2 * pr.path, 2 * pr.path, 2, 2) = pr.block;
        CHECK((oracle::embed(2 * n, m, t, p) - x.adjoint() * on_path * x).norm() < 1e-12);
      }
    }
  }
}

TEST_CASE("to_jones_basis reorders a logical block") {
  Matrix2c b;
  b << 1, 2, 3, 4;
  CHECK(to_jones_basis(b, Polarization::H, Polarization::V) == b);
  Matrix2c swapped;
  swapped << 4, 3, 2, 1;
  CHECK(to_jones_basis(b, Polarization::V, Polarization::H) == swapped);
}

TEST_CASE("direct backend calls reject odd sizes") {
  const auto plan = decompose(random_haar_unitary(3, 2));
  const auto s = schedule(plan);
  try {
    compile_hybrid(s, plan.diagonal, hybrid_encoding(2));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedDimension);
    CHECK(std::string(e.what()).find("mzi") != std::string::npos);
  }
  CHECK_THROWS_AS(compile_fullpol(s, plan.diagonal, fullpol_encoding(2)), Error);
}
