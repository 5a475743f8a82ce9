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

#ifndef VECC_ORACLE_HPP_
#define VECC_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "vecc/model.hpp"

// Exact solver for the fixed-demand admission problem: every admitted user
// receives exactly its minimum RB demand, the demands must fit into the cell
// capacity, and solutions are ranked lexicographically by (number of
// offloading users, lowest system-wide overhead).
namespace vecc::oracle {

inline constexpr std::size_t kDefaultEligibleBound = 24;
inline constexpr std::size_t kExhaustiveBound = 16;

/// One user as seen by the solver. demand_rb is empty for users that can
/// only execute locally.
struct OracleUser {
  std::optional<std::int64_t> demand_rb;
  double local_overhead = 0.0;
  double offload_overhead = 0.0;  // at demand_rb; unused when local-only
};

struct OracleSolution {
  std::vector<std::size_t> offloader_set;  // ascending user indices
  std::size_t offloader_count = 0;
  double total_overhead = 0.0;
  std::int64_t capacity_used = 0;
};

/// Thrown when an instance has more eligible users than the solver allows.
class InstanceTooLarge : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Builds solver input: minimum demands against `capacity` and the weighted
/// local / offload overheads at that demand.
std::vector<OracleUser> make_instance(std::span<const UserParams> users,
                                      std::int64_t capacity);

/// Sum over all users, in index order, of the offload overhead when
/// assignment[i] > 0 and the local overhead otherwise. Both solvers and the
/// SFA comparison use this so equal sets give bit-identical totals.
double total_overhead(std::span<const OracleUser> users,
                      std::span<const std::size_t> offloaders);

/// Dynamic programming over capacity. Throws InstanceTooLarge when the
/// number of eligible users exceeds `eligible_bound`.
OracleSolution solve_exact(std::span<const OracleUser> users,
                           std::int64_t capacity,
                           std::size_t eligible_bound = kDefaultEligibleBound);

/// Enumerates every subset of eligible users. Independent cross-check for
/// solve_exact; limited to kExhaustiveBound eligible users.
OracleSolution solve_exhaustive(std::span<const OracleUser> users,
                                std::int64_t capacity);

struct Gap {
  std::int64_t count_gap = 0;   // oracle count - SFA count
  double overhead_gap = 0.0;    // SFA overhead - oracle overhead
};

/// SFA is measured with the same canonical total as the oracle.
/// count_gap is never negative. overhead_gap is never negative when the
/// counts tie; when SFA admits fewer users it may be negative, since the
/// oracle trades overhead for admissions.
Gap gap(std::span<const OracleUser> users,
        std::span<const std::int64_t> sfa_assignment,
        const OracleSolution& oracle_result);

}  // namespace vecc::oracle

#endif  // VECC_ORACLE_HPP_
