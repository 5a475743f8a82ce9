// Copyright 2026 The VECC Simulator Authors
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

#include "vecc/allocation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vecc {

std::string_view to_string(LocalReason reason) {
  switch (reason) {
    case LocalReason::kNoFiniteEquilibrium:
      return "no_finite_equilibrium";
    case LocalReason::kRemoteInfeasible:
      return "remote_infeasible";
    case LocalReason::kExceedsSystemCapacity:
      return "exceeds_system_capacity";
  }
  return "unknown";
}

std::optional<double> equilibrium_rb(const ComputeTask& task,
                                     const ComputeProfile& profile,
                                     const RadioLink& link, const Weights& w) {
  const double lt = w.time_weight();
  const double le = w.energy_weight();
  const double beta = task.compute_units();
  const double delta = task.input_bits();

  // Per-bit cost of transmission on the left, per-task saving from not
  // executing locally on the right.
  const double numerator = le * delta * link.tx_power() + lt * delta;
  const double saving =
      lt * (beta / profile.local_speed() - beta / profile.edge_speed()) -
      le * link.tail_energy() + le * profile.energy_per_unit() * beta;
  if (!(saving > 0.0)) return std::nullopt;
  if (numerator == 0.0) return 0.0;
  return numerator / (link.rate_per_rb() * saving);
}

std::optional<double> deadline_rb(const ComputeTask& task,
                                  const ComputeProfile& profile,
                                  const RadioLink& link) {
  const double budget =
      task.deadline_s() * profile.edge_speed() - task.compute_units();
  if (!(budget > 0.0)) return std::nullopt;
  return task.input_bits() * profile.edge_speed() /
         (link.rate_per_rb() * budget);
}

DemandResult min_required_rb(const ComputeTask& task,
                             const ComputeProfile& profile,
                             const RadioLink& link, const Weights& w,
                             std::int64_t system_capacity) {
  if (system_capacity < 1) {
    throw std::invalid_argument("system_capacity must be >= 1");
  }
  DemandResult out;
  out.raw_equilibrium = equilibrium_rb(task, profile, link, w);
  out.raw_deadline = deadline_rb(task, profile, link);

  const auto cap = static_cast<double>(system_capacity);
  // Ceilings above the capacity are not representable in general; they are
  // left empty and reported as kExceedsSystemCapacity below.
  auto ceil_within = [cap](const std::optional<double>& raw)
      -> std::optional<std::int64_t> {
    if (!raw || *raw > cap) return std::nullopt;
    return static_cast<std::int64_t>(std::ceil(*raw));
  };
  out.equilibrium_rb = ceil_within(out.raw_equilibrium);
  out.deadline_rb = ceil_within(out.raw_deadline);

  if (!out.raw_equilibrium) {
    out.local_reason = LocalReason::kNoFiniteEquilibrium;
  } else if (!out.raw_deadline) {
    out.local_reason = LocalReason::kRemoteInfeasible;
  } else if (!out.equilibrium_rb || !out.deadline_rb) {
    out.local_reason = LocalReason::kExceedsSystemCapacity;
  } else {
    const std::int64_t need =
        std::max<std::int64_t>({1, *out.equilibrium_rb, *out.deadline_rb});
    if (need > system_capacity) {
      out.local_reason = LocalReason::kExceedsSystemCapacity;
    } else {
      out.min_rb = need;
    }
  }
  return out;
}

}  // namespace vecc
