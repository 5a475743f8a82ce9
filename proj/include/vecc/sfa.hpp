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

#ifndef VECC_SFA_HPP_
#define VECC_SFA_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

#include "vecc/allocation.hpp"
#include "vecc/model.hpp"
#include "vecc/rng.hpp"

// Stochastic fair allocation: an eNodeB controller and one agent per vehicle
// exchange availability queries, buffer state reports and uplink grants in
// synchronous decision slots. Each slot the controller grants one randomly
// chosen requester exactly its minimum RB demand.
namespace vecc::sfa {

using UserId = std::int32_t;

struct AvailabilityQuery {
  UserId user_id;
};
struct AvailabilityResponse {
  std::int64_t remaining_rb;
};
struct BufferStateReport {
  UserId user_id;
  std::int64_t demand_rb;
};
struct UplinkGrant {
  UserId user_id;
  std::int64_t granted_rb;
};

using Message = std::variant<AvailabilityQuery, AvailabilityResponse,
                             BufferStateReport, UplinkGrant>;

/// Raised when the controller receives reports no correct agent would send.
class ProtocolError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct ControllerState {
  std::int64_t capacity = 0;
  std::int64_t remaining_rb = 0;
  std::int64_t slot = 0;
  std::map<UserId, std::int64_t> granted;
  Rng rng{0};

  static ControllerState initial(std::int64_t capacity, std::uint64_t seed);

  std::int64_t granted_total() const;
  /// Sum of grants plus remaining RBs equals the initial capacity.
  bool conserved() const { return granted_total() + remaining_rb == capacity; }
};

enum class AgentPhase { kLocalOnly, kRequesting, kGranted, kWithdrawn };

struct AgentState {
  UserId user_id = 0;
  DemandResult demand;
  AgentPhase phase = AgentPhase::kLocalOnly;
  std::int64_t granted_rb = 0;

  static AgentState initial(UserId id, DemandResult demand);
};

enum class AgentAction { kSendBsr, kStayLocal, kWithdraw };

struct AgentDecision {
  AgentAction action = AgentAction::kStayLocal;
  std::int64_t demand_rb = 0;  // set for kSendBsr
};

/// Vehicle-side rule: request a_min while it still fits, withdraw once it
/// no longer does, never request when the demand is local-only.
AgentDecision agent_decide(const DemandResult& demand, std::int64_t remaining_rb);

struct TraceRecord {
  std::int64_t slot = 0;
  std::int64_t remaining_rb_before = 0;
  std::vector<UserId> requesters;
  std::optional<UserId> granted_user;
  std::int64_t granted_rb = 0;
  std::int64_t remaining_rb_after = 0;
};

struct ControllerStep {
  ControllerState state;
  std::optional<UplinkGrant> grant;
  TraceRecord record;
};

/// One controller decision slot. Reports are sorted by user id before the
/// uniform draw, so the outcome does not depend on arrival order. Throws
/// ProtocolError for duplicate reports, reports from granted users, or
/// demands that are non-positive or exceed the remaining capacity.
ControllerStep controller_step(ControllerState state,
                               std::vector<BufferStateReport> reports);

struct SfaRun {
  /// Decision profile: a_i = min_rb for granted users, 0 otherwise.
  std::vector<std::int64_t> assignment;
  std::vector<AgentState> agents;
  std::vector<TraceRecord> trace;
  /// Messages exchanged in each slot, parallel to trace.
  std::vector<std::vector<Message>> messages;
  std::int64_t capacity = 0;
  std::int64_t remaining_rb = 0;

  std::int64_t grant_count() const;
};

/// Runs the slot engine over precomputed demands. The controller's random
/// choice is seeded from derive_seed(seed, kControllerStream).
SfaRun run_sfa(std::span<const DemandResult> demands, std::int64_t capacity,
               std::uint64_t seed);

/// Computes every user's minimum demand against the capacity, then runs
/// the slot engine.
SfaRun run_sfa(std::span<const UserParams> users, std::int64_t capacity,
               std::uint64_t seed);

}  // namespace vecc::sfa

#endif  // VECC_SFA_HPP_
