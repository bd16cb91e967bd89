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

#include "photomesh/schedule.hpp"

#include <algorithm>
#include <sstream>

#include "photomesh/error.hpp"

namespace photomesh {

std::size_t LayerSchedule::rotation_count() const {
  std::size_t total = 0;
  for (const auto& c : columns) total += c.ops.size();
  return total;
}

static LayerKind kind_for_column(std::size_t index) {
  return index % 2 == 0 ? LayerKind::Omega1 : LayerKind::Omega2;
}

static std::string describe(std::size_t index, const RotationParams& p) {
  std::ostringstream os;
  os << "rotation #" << index << " (m=" << p.m << ", theta=" << p.theta
     << ", phi=" << p.phi << ")";
  return os.str();
}

LayerSchedule schedule(const DecompositionPlan& plan) {
  const int n = plan.dim;
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "schedule: empty plan");

  // last[k] = index of the last column touching mode k, or -1.
  std::vector<long> last(n, -1);
  LayerSchedule out;
  out.dim = n;

  for (std::size_t i = 0; i < plan.rotations.size(); ++i) {
    const RotationParams& p = plan.rotations[i];
    if (p.m < 0 || p.m > n - 2) {
      throw Error(ErrorCode::SchedulingInfeasible,
                  describe(i, p) + " addresses modes outside the plan");
    }
    long col = std::max(last[p.m], last[p.m + 1]) + 1;
    if (col % 2 != p.m % 2) ++col;
    if (static_cast<std::size_t>(col) > out.columns.size()) {
      // The skipped column would stay empty: the plan is not in rectangular order.
      throw Error(ErrorCode::SchedulingInfeasible,
                  describe(i, p) + " would leave an empty layer before it");
    }
    if (static_cast<std::size_t>(col) == out.columns.size()) {
      out.columns.push_back(LayerColumn{kind_for_column(col), {}});
    }
    out.columns[col].ops.push_back(p);
    last[p.m] = last[p.m + 1] = col;
  }

  for (auto& c : out.columns) {
    std::sort(c.ops.begin(), c.ops.end(),
              [](const RotationParams& a, const RotationParams& b) { return a.m < b.m; });
  }
  return out;
}

ScheduleCheck validate(const LayerSchedule& sched) {
  auto fail = [](std::string msg) { return ScheduleCheck{false, std::move(msg)}; };
  for (std::size_t c = 0; c < sched.columns.size(); ++c) {
    const LayerColumn& col = sched.columns[c];
    std::ostringstream where;
    where << "column " << c;
    if (col.kind != kind_for_column(c)) {
      return fail(where.str() + ": layer kinds must alternate starting with Omega1");
    }
    if (col.ops.empty()) return fail(where.str() + ": empty column");
    std::vector<bool> used(std::max(sched.dim, 0), false);
    for (const RotationParams& p : col.ops) {
      if (p.m < 0 || p.m > sched.dim - 2) {
        return fail(where.str() + ": mode index out of range (m=" + std::to_string(p.m) + ")");
      }
      const int parity = col.kind == LayerKind::Omega1 ? 0 : 1;
      if (p.m % 2 != parity) {
        return fail(where.str() + ": parity violation (m=" + std::to_string(p.m) + ")");
      }
      if (used[p.m] || used[p.m + 1]) {
        return fail(where.str() + ": overlapping mode pairs at m=" + std::to_string(p.m));
      }
      used[p.m] = used[p.m + 1] = true;
    }
  }
  return {};
}

ComplexMatrix replay(const LayerSchedule& sched, std::span<const double> diagonal) {
  const int n = sched.dim;
  ComplexMatrix m = ComplexMatrix::Identity(n, n);
  for (const auto& col : sched.columns) {
    for (const auto& p : col.ops) apply_rotation_left(m, p);
  }
  if (!diagonal.empty()) {
    if (static_cast<int>(diagonal.size()) != n) {
      throw Error(ErrorCode::InvalidArgument, "replay: diagonal length mismatch");
    }
    for (int j = 0; j < n; ++j) m.row(j) *= std::polar(1.0, diagonal[j]);
  }
  return m;
}

}  // namespace photomesh
