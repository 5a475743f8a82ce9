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

#include "vecc/sfa.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace vecc::sfa {

ControllerState ControllerState::initial(std::int64_t capacity,
                                         std::uint64_t seed) {
  if (capacity < 0) throw std::invalid_argument("capacity must be >= 0");
  ControllerState s;
  s.capacity = capacity;
  s.remaining_rb = capacity;
  s.rng = Rng(derive_seed(seed, kControllerStream));
  return s;
}

std::int64_t ControllerState::granted_total() const {
  std::int64_t total = 0;
  for (const auto& [id, rb] : granted) total += rb;
  return total;
}

AgentState AgentState::initial(UserId id, DemandResult demand) {
  AgentState a;
  a.user_id = id;
  a.phase = demand.offloadable() ? AgentPhase::kRequesting
                                 : AgentPhase::kLocalOnly;
  a.demand = std::move(demand);
  return a;
}

AgentDecision agent_decide(const DemandResult& demand,
                           std::int64_t remaining_rb) {
  if (!demand.min_rb) return {AgentAction::kStayLocal, 0};
  if (remaining_rb >= *demand.min_rb) {
    return {AgentAction::kSendBsr, *demand.min_rb};
  }
  return {AgentAction::kWithdraw, 0};
}

ControllerStep controller_step(ControllerState state,
                               std::vector<BufferStateReport> reports) {
  std::sort(reports.begin(), reports.end(),
            [](const auto& a, const auto& b) { return a.user_id < b.user_id; });
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    const std::string who = "user " + std::to_string(r.user_id);
    if (i > 0 && reports[i - 1].user_id == r.user_id) {
      throw ProtocolError(who + " sent more than one BSR in a slot");
    }
    if (state.granted.contains(r.user_id)) {
      throw ProtocolError(who + " requested after being granted");
    }
    if (r.demand_rb < 1) {
      throw ProtocolError(who + " requested a non-positive RB count");
    }
    if (r.demand_rb > state.remaining_rb) {
      throw ProtocolError(who + " requested more RBs than remain");
    }
  }

  ControllerStep out;
  out.record.slot = state.slot;
  out.record.remaining_rb_before = state.remaining_rb;
  out.record.requesters.reserve(reports.size());
  for (const auto& r : reports) out.record.requesters.push_back(r.user_id);

  if (!reports.empty()) {
    const auto& chosen = reports[state.rng.uniform_index(reports.size())];
    out.grant = UplinkGrant{chosen.user_id, chosen.demand_rb};
    state.granted.emplace(chosen.user_id, chosen.demand_rb);
    state.remaining_rb -= chosen.demand_rb;
    out.record.granted_user = chosen.user_id;
    out.record.granted_rb = chosen.demand_rb;
  }
  out.record.remaining_rb_after = state.remaining_rb;
  ++state.slot;
  out.state = std::move(state);
  return out;
}

std::int64_t SfaRun::grant_count() const {
  return std::count_if(trace.begin(), trace.end(),
                       [](const auto& r) { return r.granted_user.has_value(); });
}

SfaRun run_sfa(std::span<const DemandResult> demands, std::int64_t capacity,
               std::uint64_t seed) {
  SfaRun run;
  run.capacity = capacity;
  auto controller = ControllerState::initial(capacity, seed);

  run.agents.reserve(demands.size());
  for (std::size_t i = 0; i < demands.size(); ++i) {
    run.agents.push_back(AgentState::initial(static_cast<UserId>(i), demands[i]));
  }

  auto smallest_pending_demand = [&run]() {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (const auto& a : run.agents) {
      if (a.phase == AgentPhase::kRequesting) best = std::min(best, *a.demand.min_rb);
    }
    return best;
  };

  // Loop guard: some still-requesting agent fits into the remaining RBs.
  while (controller.remaining_rb >= smallest_pending_demand()) {
    std::vector<Message> messages;
    std::vector<BufferStateReport> reports;
    for (auto& agent : run.agents) {
      if (agent.phase != AgentPhase::kRequesting) continue;
      messages.emplace_back(AvailabilityQuery{agent.user_id});
      messages.emplace_back(AvailabilityResponse{controller.remaining_rb});
      const auto decision = agent_decide(agent.demand, controller.remaining_rb);
      if (decision.action == AgentAction::kSendBsr) {
        reports.push_back({agent.user_id, decision.demand_rb});
        messages.emplace_back(reports.back());
      } else if (decision.action == AgentAction::kWithdraw) {
        agent.phase = AgentPhase::kWithdrawn;
      }
    }

    auto step = controller_step(std::move(controller), std::move(reports));
    controller = std::move(step.state);
    if (step.grant) {
      auto& agent = run.agents[static_cast<std::size_t>(step.grant->user_id)];
      agent.phase = AgentPhase::kGranted;
      agent.granted_rb = step.grant->granted_rb;
      messages.emplace_back(*step.grant);
    }
    run.trace.push_back(std::move(step.record));
    run.messages.push_back(std::move(messages));
  }

  run.assignment.assign(run.agents.size(), 0);
  for (auto& agent : run.agents) {
    if (agent.phase == AgentPhase::kRequesting) agent.phase = AgentPhase::kWithdrawn;
    if (agent.phase == AgentPhase::kGranted) {
      run.assignment[static_cast<std::size_t>(agent.user_id)] = agent.granted_rb;
    }
  }
  run.remaining_rb = controller.remaining_rb;
  return run;
}

SfaRun run_sfa(std::span<const UserParams> users, std::int64_t capacity,
               std::uint64_t seed) {
  if (capacity < 0) throw std::invalid_argument("capacity must be >= 0");
  std::vector<DemandResult> demands;
  demands.reserve(users.size());
  // A zero-capacity cell still gets demands; the loop guard admits nobody.
  const std::int64_t demand_capacity = std::max<std::int64_t>(capacity, 1);
  for (const auto& u : users) demands.push_back(min_required_rb(u, demand_capacity));
  return run_sfa(std::span<const DemandResult>(demands), capacity, seed);
}

}  // namespace vecc::sfa
