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

#ifndef VECC_ALLOCATION_HPP_
#define VECC_ALLOCATION_HPP_

#include <cstdint>
#include <optional>
#include <string_view>

#include "vecc/model.hpp"

namespace vecc {

/// Why a user cannot be admitted for offloading.
enum class LocalReason {
  kNoFiniteEquilibrium,    // offloading never beats local execution
  kRemoteInfeasible,       // edge execution alone already misses the deadline
  kExceedsSystemCapacity,  // minimum demand is larger than the whole cell
};

std::string_view to_string(LocalReason reason);

/// Per-user resource block demand.
///
/// Either min_rb holds a positive count (the user may offload) or
/// local_reason holds exactly one reason the user stays local.
struct DemandResult {
  std::optional<double> raw_equilibrium;  // unrounded break-even RB count
  std::optional<double> raw_deadline;     // unrounded deadline RB count
  std::optional<std::int64_t> equilibrium_rb;
  std::optional<std::int64_t> deadline_rb;
  std::optional<std::int64_t> min_rb;
  std::optional<LocalReason> local_reason;

  bool offloadable() const { return min_rb.has_value(); }
};

/// Real-valued RB count at which offload and local overheads are equal.
/// std::nullopt when the denominator term is <= 0: offloading never breaks
/// even at any bandwidth.
std::optional<double> equilibrium_rb(const ComputeTask& task,
                                     const ComputeProfile& profile,
                                     const RadioLink& link, const Weights& w);

/// Real-valued RB count at which the offload completion time equals the
/// deadline. std::nullopt when deadline * edge_speed <= compute_units.
std::optional<double> deadline_rb(const ComputeTask& task,
                                  const ComputeProfile& profile,
                                  const RadioLink& link);

/// max(ceil(a*), ceil(a_deadline)), clamped to at least one RB.
/// Throws std::invalid_argument when system_capacity < 1.
DemandResult min_required_rb(const ComputeTask& task,
                             const ComputeProfile& profile,
                             const RadioLink& link, const Weights& w,
                             std::int64_t system_capacity);

inline DemandResult min_required_rb(const UserParams& u,
                                    std::int64_t system_capacity) {
  return min_required_rb(u.task, u.profile, u.link, u.weights,
                         system_capacity);
}

}  // namespace vecc

#endif  // VECC_ALLOCATION_HPP_
