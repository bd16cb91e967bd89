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

Netlist path_netlist(int paths) {
  Netlist nl;
  nl.arch = Architecture::Mzi;
  nl.dim = paths;
  nl.spatial_paths = paths;
  nl.polarized = false;
  for (int p = 0; p < paths; ++p) {
    nl.inputs.push_back({p, Polarization::H});
    nl.outputs.push_back({p, Polarization::H});
  }
  return nl;
}

// Polarized netlist whose logical order equals the reference order.
Netlist pol_netlist(int paths) {
  Netlist nl;
  nl.arch = Architecture::FullPol;
  nl.dim = 2 * paths;
  nl.spatial_paths = paths;
  nl.polarized = true;
  for (int p = 0; p < paths; ++p) {
    for (auto pol : {Polarization::V, Polarization::H}) {
      nl.inputs.push_back({p, pol});
      nl.outputs.push_back({p, pol});
    }
  }
  return nl;
}

}  // namespace

TEST_CASE("elementary blocks") {
  const Netlist nl = path_netlist(3);
  CHECK((element_unitary(PhaseShifter{1, 0.0, std::nullopt}, nl) - ComplexMatrix::Identity(3, 3)).norm() == 0);
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> a(0, 2 * oracle::pi);
  for (int k = 0; k < 50; ++k) {
    const double t = a(rng) / 4, p = a(rng);
    CHECK((element_unitary(Mzi{1, 2, t, p}, nl) - oracle::embed(3, 1, t, p)).norm() < 1e-13);
  }
  const ComplexMatrix bs = element_unitary(BalancedBS{0, 1}, path_netlist(2));
  oracle::M want(2, 2);
  want << 1, 1, 1, -1;
  CHECK((bs - want / std::sqrt(2.0)).norm() < 1e-15);
}

TEST_CASE("PBS swaps vertical light and fixes horizontal light") {
  const Netlist nl = pol_netlist(2);
  const ComplexMatrix u = element_unitary(Pbs{0, 1}, nl);
  const int pv = nl.mode_index(0, Polarization::V), ph = nl.mode_index(0, Polarization::H);
  const int qv = nl.mode_index(1, Polarization::V), qh = nl.mode_index(1, Polarization::H);
  CHECK(u(qv, pv) == Complex(1));
  CHECK(u(pv, qv) == Complex(1));
  CHECK(u(ph, ph) == Complex(1));
  CHECK(u(qh, qh) == Complex(1));
  CHECK((u * u - ComplexMatrix::Identity(4, 4)).norm() == 0);
  CHECK(oracle::unitarity(u) == 0);
}

TEST_CASE("PDBS acts on one polarization only") {
  const Netlist nl = pol_netlist(2);
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> a(0, 2 * oracle::pi);
  for (auto active : {Polarization::V, Polarization::H}) {
    const double t = a(rng) / 4, p = a(rng);
    const ComplexMatrix u = element_unitary(Pdbs{0, 1, active, t, p}, nl);
    const int i = nl.mode_index(0, active), j = nl.mode_index(1, active);
    const int k = nl.mode_index(0, other(active)), l = nl.mode_index(1, other(active));
    const oracle::M2 r = oracle::rotation(t, p);
    CHECK(std::abs(u(i, i) - r(0, 0)) < 1e-13);
    CHECK(std::abs(u(i, j) - r(0, 1)) < 1e-13);
    CHECK(std::abs(u(j, i) - r(1, 0)) < 1e-13);
    CHECK(std::abs(u(j, j) - r(1, 1)) < 1e-13);
    CHECK(std::abs(u(k, k) - 1.0) < 1e-13);
    CHECK(std::abs(u(l, l) - 1.0) < 1e-13);
    CHECK(std::abs(u(k, l)) < 1e-13);
  }
}

TEST_CASE("wave plate elements use the Jones convention") {
  const Netlist nl = pol_netlist(1);
  const ComplexMatrix u = element_unitary(WavePlateElem{0, WavePlate::make(PlateKind::QWP, 0.3)}, nl);
  const oracle::M2 q = oracle::qwp_explicit(0.3);
  const int h = nl.mode_index(0, Polarization::H), v = nl.mode_index(0, Polarization::V);
  CHECK(std::abs(u(h, h) - q(0, 0)) < 1e-14);
  CHECK(std::abs(u(h, v) - q(0, 1)) < 1e-14);
  CHECK(std::abs(u(v, h) - q(1, 0)) < 1e-14);
  CHECK(std::abs(u(v, v) - q(1, 1)) < 1e-14);
}

TEST_CASE("empty netlist and verification") {
  const Netlist empty = path_netlist(4);
  CHECK(netlist_unitary(empty) == ComplexMatrix::Identity(4, 4));
  CHECK(verify(empty, ComplexMatrix::Identity(4, 4), 1e-12).pass);

  const ComplexMatrix u = random_haar_unitary(6, 42);
  for (auto a : {Architecture::Mzi, Architecture::FullPol}) {
    const Netlist nl = compile(u, a);
    const auto r = verify(nl, u, 1e-9);
    CHECK(r.pass);
    CHECK(r.frobenius_error < 1e-10);
    CHECK(r.phase_invariant_error <= r.frobenius_error);
    const ComplexMatrix v = random_haar_unitary(6, 43);
    const auto bad = verify(nl, v, 1e-9);
    CHECK(!bad.pass);
    CHECK(bad.phase_invariant_error == Catch::Approx(distance_up_to_global_phase(u, v)).margin(1e-9));
  }
  // A global phase is reported, not counted as error.
  const Netlist nl = compile(u, Architecture::Mzi);
  const auto r = verify(nl, std::polar(1.0, 0.7) * u, 1e-9);
  CHECK(r.pass);
  CHECK(r.frobenius_error > 0.1);
  CHECK(std::abs(std::polar(1.0, r.global_phase) - std::polar(1.0, -0.7)) < 1e-9);
}

TEST_CASE("netlist checks") {
  Netlist nl = path_netlist(3);
  nl.stages.push_back({StageRole::Omega1, 0, true, 0, {Mzi{0, 1, 0.1, 0.2}, Mzi{1, 2, 0.1, 0.2}}});
  CHECK_THROWS_AS(check_netlist(nl), Error);
  nl.stages[0].elements = {Mzi{0, 3, 0.1, 0.2}};
  CHECK_THROWS_AS(check_netlist(nl), Error);
  nl.stages[0].elements = {Pbs{0, 1}};
  CHECK_THROWS_AS(check_netlist(nl), Error);
  nl.stages[0].elements = {DiagonalPhases{{0.0, 0.0}}};
  CHECK_THROWS_AS(check_netlist(nl), Error);

  // Light leaving through a rail that is not an output port is an error.
  Netlist leak = pol_netlist(2);
  leak.dim = 2;
  leak.inputs = {{0, Polarization::V}, {0, Polarization::H}};
  leak.outputs = leak.inputs;
  leak.stages.push_back({StageRole::XGate, 0, false, -1, {Pbs{0, 1}}});
  try {
    netlist_unitary(leak);
    FAIL("expected InvalidNetlist");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidNetlist);
  }
}

TEST_CASE("loss model validation") {
  CHECK_NOTHROW(LossModel{}.validate());
  CHECK_THROWS_AS((LossModel{0.0, 1, 1, 1, 1}.validate()), Error);
  CHECK_THROWS_AS((LossModel{1, 1.01, 1, 1, 1}.validate()), Error);
  CHECK_THROWS_AS((LossModel{1, 1, NAN, 1, 1}.validate()), Error);
  CHECK(!(LossModel{1, 1, 1, 0.9, 0.95}.warnings().empty()));
  CHECK((LossModel{1, 1, 1, 0.99, 0.9}.warnings().empty()));
}

TEST_CASE("lossless transmission is one everywhere") {
  for (auto a : {Architecture::Mzi, Architecture::Hybrid, Architecture::FullPol}) {
    const auto t = transmission(compile(random_haar_unitary(6, 1), a), LossModel{});
    CHECK(t.worst_case == 1.0);
    for (double x : t.per_mode) CHECK(x == 1.0);
  }
}

TEST_CASE("lossy transfer matrix is bounded by the structural transmission") {
  // Each stage scales the modes it touches by sqrt(eta) at worst, so every
  // squared singular value lies between the worst-case product and one.
  const LossModel l{0.97, 0.98, 0.99, 0.95, 0.96};
  for (int n : {4, 6, 8}) {
    const ComplexMatrix u = random_haar_unitary(n, n);
    const Netlist nl = compile(u, Architecture::Mzi);
    const auto t = transmission(nl, l);
    CHECK(t.worst_case == Catch::Approx(std::pow(0.97 * 0.95, 2 * n)).epsilon(1e-12));
    // Edge paths skip every other column.
    CHECK(t.per_mode.front() > t.worst_case);
    const Eigen::JacobiSVD<ComplexMatrix> svd(lossy_transfer_matrix(nl, l));
    for (double s : svd.singularValues()) {
      CHECK(s * s <= 1.0 + 1e-12);
      CHECK(s * s >= t.worst_case * (1 - 1e-12));
    }
  }
  const ComplexMatrix u = random_haar_unitary(6, 2);
  const Netlist fp = compile(u, Architecture::FullPol);
  CHECK((lossy_transfer_matrix(fp, LossModel{}) - netlist_unitary(fp)).norm() < 1e-13);
}

TEST_CASE("element transmission factors") {
  const LossModel l{0.9, 0.8, 0.7, 0.6, 0.5};
  CHECK(element_transmission(Mzi{}, l) == Catch::Approx(std::pow(0.9 * 0.6, 2)));
  CHECK(element_transmission(Pdbs{}, l) == Catch::Approx(std::pow(0.9 * 0.5, 2)));
  CHECK(element_transmission(Pbs{}, l) == Catch::Approx(0.8));
  CHECK(element_transmission(WavePlateElem{}, l) == Catch::Approx(0.7));
  CHECK(element_transmission(CombinedRotation{0, synthesize(Matrix2c::Identity())}, l) ==
        Catch::Approx(std::pow(0.7, 3)));
  CHECK(element_transmission(PhaseShifter{0, 0.1, std::nullopt}, l) == Catch::Approx(0.6));
  CHECK(element_transmission(PhaseShifter{0, 0.1, Polarization::V}, l) == Catch::Approx(0.5));
}

TEST_CASE("every element block is unitary") {
  const ComplexMatrix u = random_haar_unitary(6, 17);
  for (auto a : {Architecture::Mzi, Architecture::Hybrid, Architecture::FullPol}) {
    const Netlist nl = compile(u, a);
    for (const auto& s : nl.stages)
      for (const auto& e : s.elements) CHECK(is_unitary(element_unitary(e, nl), 1e-13));
  }
}

TEST_CASE("splitting a netlist at any stage boundary composes back") {
  const ComplexMatrix u = random_haar_unitary(6, 18);
  for (auto a : {Architecture::Mzi, Architecture::FullPol}) {
    const Netlist nl = compile(u, a);
    const ComplexMatrix whole = simulation_unitary(nl);
    for (std::size_t cut = 0; cut <= nl.stages.size(); ++cut) {
      Netlist head = nl, tail = nl;
      head.stages.assign(nl.stages.begin(), nl.stages.begin() + cut);
      tail.stages.assign(nl.stages.begin() + cut, nl.stages.end());
      CHECK((simulation_unitary(tail) * simulation_unitary(head) - whole).norm() < 1e-12);
    }
  }
}

TEST_CASE("lowering any eta never raises the worst case") {
  const ComplexMatrix u = random_haar_unitary(8, 19);
  const LossModel base{0.99, 0.98, 0.97, 0.96, 0.95};
  for (auto a : {Architecture::Mzi, Architecture::Hybrid, Architecture::FullPol}) {
    const Netlist nl = compile(u, a);
    const double t0 = transmission(nl, base).worst_case;
    for (int k = 0; k < 5; ++k) {
      LossModel l = base;
      double* f[] = {&l.eta_b, &l.eta_p, &l.eta_w, &l.eta_ph_mzi, &l.eta_ph};
      *f[k] *= 0.9;
      CHECK(transmission(nl, l).worst_case <= t0);
    }
  }
}

TEST_CASE("simulator argument errors") {
  const Netlist nl = path_netlist(2);
  try {
    element_unitary(Mzi{1, 2, 0.1, 0.1}, nl);
    FAIL("expected InvalidNetlist");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidNetlist);
  }
  try {
    verify(nl, ComplexMatrix::Identity(3, 3), 1e-9);
    FAIL("expected InvalidArgument");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidArgument);
  }
}
