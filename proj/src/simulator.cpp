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

#include "photomesh/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "photomesh/compiler.hpp"
#include "photomesh/error.hpp"

namespace photomesh {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};


LocalBlock two_path_block(const Netlist& nl, int p, int q, const Matrix2c& for_v,
                          const Matrix2c& for_h) {
  LocalBlock b;
  if (!nl.polarized) {
    b.modes = {p, q};
    b.matrix = for_h;
    return b;
  }
  b.modes = {nl.mode_index(p, Polarization::V), nl.mode_index(q, Polarization::V),
             nl.mode_index(p, Polarization::H), nl.mode_index(q, Polarization::H)};
  b.matrix = ComplexMatrix::Zero(4, 4);
  b.matrix.topLeftCorner<2, 2>() = for_v;
  b.matrix.bottomRightCorner<2, 2>() = for_h;
  return b;
}

LocalBlock jones_block(const Netlist& nl, int path, const Matrix2c& jones_hv) {
  LocalBlock b;
  b.modes = {nl.mode_index(path, Polarization::H), nl.mode_index(path, Polarization::V)};
  b.matrix = jones_hv;
  return b;
}

void apply_block(ComplexMatrix& m, const LocalBlock& b) {
  const int k = static_cast<int>(b.modes.size());
  ComplexMatrix rows(k, m.cols());
  for (int i = 0; i < k; ++i) rows.row(i) = m.row(b.modes[i]);
  rows = b.matrix * rows;
  for (int i = 0; i < k; ++i) m.row(b.modes[i]) = rows.row(i);
}

ComplexMatrix port_isometry(const Netlist& nl, const std::vector<Port>& ports) {
  ComplexMatrix e = ComplexMatrix::Zero(nl.simulation_dim(), nl.dim);
  for (int j = 0; j < nl.dim; ++j) e(nl.mode_index(ports[j].path, ports[j].pol), j) = 1.0;
  return e;
}

ComplexMatrix compose(const Netlist& nl, const LossModel* loss) {
  check_netlist(nl);
  const int d = nl.simulation_dim();
  ComplexMatrix m = ComplexMatrix::Identity(d, d);
  for (const Stage& s : nl.stages) {
    for (const Element& e : s.elements) {
      LocalBlock b = element_block(e, nl);
      if (loss && s.role != StageRole::Diagonal) {
        b.matrix *= std::sqrt(element_transmission(e, *loss));
      }
      apply_block(m, b);
    }
  }
  return m;
}

bool is_fixed_half_wave(const WavePlate& p) {
  return p.kind == PlateKind::HWP && std::abs(p.orientation - kPi / 4) < 1e-12;
}

}  // namespace

void LossModel::validate() const {
  const std::pair<const char*, double> fields[] = {{"eta_b", eta_b},
                                                   {"eta_p", eta_p},
                                                   {"eta_w", eta_w},
                                                   {"eta_ph_mzi", eta_ph_mzi},
                                                   {"eta_ph", eta_ph}};
  for (const auto& [name, v] : fields) {
    if (!(v > 0.0 && v <= 1.0)) {
      std::ostringstream os;
      os << "transmission coefficient " << name << "=" << v << " outside (0, 1]";
      throw Error(ErrorCode::InvalidArgument, os.str());
    }
  }
}

std::vector<std::string> LossModel::warnings() const {
  std::vector<std::string> w;
  if (eta_ph_mzi <= eta_ph && !(eta_ph_mzi == 1.0 && eta_ph == 1.0)) {
    w.push_back("MZI phase-shifter transmission is not above the PDBS combined-phase "
                "transmission; the usual ordering is eta_ph_mzi > eta_ph");
  }
  return w;
}

LocalBlock element_block(const Element& e, const Netlist& nl) {
  return std::visit(
      overloaded{
          [&](const Mzi& x) {
            const Matrix2c t = mzi_transfer(mzi_settings({x.p, x.theta, x.phi}));
            return two_path_block(nl, x.p, x.q, t, t);
          },
          [&](const BalancedBS& x) {
            const double r = 1.0 / std::sqrt(2.0);
            Matrix2c bs;
            bs << r, r,
                  r, -r;
            return two_path_block(nl, x.p, x.q, bs, bs);
          },
          [&](const PhaseShifter& x) {
            LocalBlock b;
            const Complex ph = std::polar(1.0, x.phase);
            if (!nl.polarized) {
              b.modes = {x.path};
              b.matrix = ComplexMatrix::Constant(1, 1, ph);
            } else if (x.pol) {
              b.modes = {nl.mode_index(x.path, *x.pol)};
              b.matrix = ComplexMatrix::Constant(1, 1, ph);
            } else {
              b.modes = {nl.mode_index(x.path, Polarization::V),
                         nl.mode_index(x.path, Polarization::H)};
              b.matrix = ph * ComplexMatrix::Identity(2, 2);
            }
            return b;
          },
          [&](const WavePlateElem& x) { return jones_block(nl, x.path, jones(x.plate)); },
          [&](const CombinedRotation& x) {
            return jones_block(nl, x.path, gadget_matrix(x.gadget));
          },
          [&](const Pdbs& x) {
            const Matrix2c on = mzi_transfer(mzi_settings({x.p, x.theta, x.phi}));
            const Matrix2c off = mzi_transfer(mzi_settings({x.p, 0.0, 0.0}));
            return x.active == Polarization::V ? two_path_block(nl, x.p, x.q, on, off)
                                               : two_path_block(nl, x.p, x.q, off, on);
          },
          [&](const Pbs& x) {
            Matrix2c swap;
            swap << 0, 1,
                    1, 0;
            return two_path_block(nl, x.p, x.q, swap, Matrix2c::Identity());
          },
          [&](const DiagonalPhases& x) {
            LocalBlock b;
            b.matrix = ComplexMatrix::Zero(nl.dim, nl.dim);
            for (int j = 0; j < nl.dim; ++j) {
              b.modes.push_back(nl.mode_index(nl.outputs[j].path, nl.outputs[j].pol));
              b.matrix(j, j) = std::polar(1.0, x.phases.at(j));
            }
            return b;
          },
      },
      e);
}

ComplexMatrix element_unitary(const Element& e, const Netlist& nl) {
  const int d = nl.simulation_dim();
  for (int p : element_paths(e, nl.spatial_paths)) {
    if (p < 0 || p >= nl.spatial_paths) {
      throw Error(ErrorCode::InvalidNetlist, "element touches unknown path " + std::to_string(p));
    }
  }
  ComplexMatrix m = ComplexMatrix::Identity(d, d);
  apply_block(m, element_block(e, nl));
  return m;
}

ComplexMatrix simulation_unitary(const Netlist& nl) { return compose(nl, nullptr); }

ComplexMatrix netlist_unitary(const Netlist& nl) {
  const ComplexMatrix full = simulation_unitary(nl);
  const ComplexMatrix in = port_isometry(nl, nl.inputs);
  const ComplexMatrix out = port_isometry(nl, nl.outputs);
  const ComplexMatrix image = full * in;
  const ComplexMatrix logical = out.adjoint() * image;
  const double leaked = (image - out * logical).norm();
  if (leaked > 1e-9) {
    std::ostringstream os;
    os << "netlist leaks amplitude " << leaked << " outside its output ports";
    throw Error(ErrorCode::InvalidNetlist, os.str());
  }
  return logical;
}

VerificationReport verify(const Netlist& nl, const ComplexMatrix& target, double tol) {
  if (target.rows() != nl.dim || target.cols() != nl.dim) {
    std::ostringstream os;
    os << "verify: netlist dimension " << nl.dim << " does not match target " << target.rows()
       << "x" << target.cols();
    throw Error(ErrorCode::InvalidArgument, os.str());
  }
  const ComplexMatrix u = netlist_unitary(nl);
  VerificationReport r;
  r.frobenius_error = (u - target).norm();
  r.global_phase = wrap_phase(optimal_global_phase(u, target));
  r.phase_invariant_error = distance_up_to_global_phase(u, target);
  // The optimum over gamma can never exceed the gamma = 0 value.
  r.phase_invariant_error = std::min(r.phase_invariant_error, r.frobenius_error);
  r.pass = r.phase_invariant_error <= tol;
  return r;
}

double element_transmission(const Element& e, const LossModel& l) {
  return std::visit(
      overloaded{
          [&](const Mzi&) { return std::pow(l.eta_b * l.eta_ph_mzi, 2); },
          [&](const BalancedBS&) { return l.eta_b; },
          [&](const PhaseShifter& x) { return x.pol ? l.eta_ph : l.eta_ph_mzi; },
          [&](const WavePlateElem&) { return l.eta_w; },
          [&](const CombinedRotation& x) {
            return std::pow(l.eta_w, static_cast<double>(x.gadget.plates.size()));
          },
          [&](const Pdbs&) { return std::pow(l.eta_b * l.eta_ph, 2); },
          [&](const Pbs&) { return l.eta_p; },
          [&](const DiagonalPhases&) { return 1.0; },
      },
      e);
}

Transmission transmission(const Netlist& nl, const LossModel& loss) {
  check_netlist(nl);
  loss.validate();
  Transmission t;
  t.per_mode.assign(nl.dim, 1.0);
  for (int j = 0; j < nl.dim; ++j) {
    Port at = nl.inputs[j];
    double acc = 1.0;
    for (const Stage& s : nl.stages) {
      if (s.role == StageRole::Diagonal) continue;
      for (const Element& e : s.elements) {
        const auto paths = element_paths(e, nl.spatial_paths);
        if (std::find(paths.begin(), paths.end(), at.path) == paths.end()) continue;
        acc *= element_transmission(e, loss);
        if (const auto* pbs = std::get_if<Pbs>(&e); pbs && nl.polarized &&
                                                     at.pol == Polarization::V) {
          at.path = (at.path == pbs->p) ? pbs->q : pbs->p;
        } else if (const auto* wp = std::get_if<WavePlateElem>(&e);
                   wp && is_fixed_half_wave(wp->plate)) {
          at.pol = other(at.pol);
        }
        break;
      }
    }
    t.per_mode[j] = acc;
  }
  t.worst_case = t.per_mode.empty() ? 1.0 : *std::min_element(t.per_mode.begin(), t.per_mode.end());
  return t;
}

ComplexMatrix lossy_transfer_matrix(const Netlist& nl, const LossModel& loss) {
  loss.validate();
  const ComplexMatrix full = compose(nl, &loss);
  return port_isometry(nl, nl.outputs).adjoint() * full * port_isometry(nl, nl.inputs);
}

}  // namespace photomesh
