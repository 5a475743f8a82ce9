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

#include <random>
#include <set>

#include "gtest/gtest.h"
#include "test_support.hpp"

namespace vecc::sfa {
namespace {

DemandResult Demand(std::int64_t rb) {
  DemandResult d;
  d.raw_equilibrium = 0.5;
  d.raw_deadline = static_cast<double>(rb);
  d.equilibrium_rb = 1;
  d.deadline_rb = rb;
  d.min_rb = rb;
  return d;
}

DemandResult LocalOnly(LocalReason why) {
  DemandResult d;
  d.local_reason = why;
  return d;
}

TEST(AgentDecideTest, RequestsWhileDemandFits) {
  const auto d = agent_decide(Demand(2), 5);
  EXPECT_EQ(d.action, AgentAction::kSendBsr);
  EXPECT_EQ(d.demand_rb, 2);
  EXPECT_EQ(agent_decide(Demand(2), 2).action, AgentAction::kSendBsr);
}

TEST(AgentDecideTest, WithdrawsWhenDemandNoLongerFits) {
  EXPECT_EQ(agent_decide(Demand(2), 1).action, AgentAction::kWithdraw);
}

TEST(AgentDecideTest, LocalOnlyStaysLocal) {
  EXPECT_EQ(agent_decide(LocalOnly(LocalReason::kRemoteInfeasible), 100).action,
            AgentAction::kStayLocal);
}

TEST(ControllerStepTest, GrantsOneRequesterAndDecrements) {
  auto state = ControllerState::initial(5, 99);
  const auto step = controller_step(state, {{1, 2}, {2, 2}, {3, 2}});
  ASSERT_TRUE(step.grant.has_value());
  EXPECT_EQ(step.grant->granted_rb, 2);
  EXPECT_TRUE(step.grant->user_id >= 1 && step.grant->user_id <= 3);
  EXPECT_EQ(step.state.remaining_rb, 3);
  EXPECT_EQ(step.state.slot, 1);
  EXPECT_TRUE(step.state.conserved());
  EXPECT_EQ(step.record.granted_user, step.grant->user_id);
  EXPECT_EQ(step.record.requesters, (std::vector<UserId>{1, 2, 3}));
  EXPECT_EQ(step.record.remaining_rb_before, 5);
  EXPECT_EQ(step.record.remaining_rb_after, 3);
}

TEST(ControllerStepTest, NoReportsKeepsRemaining) {
  const auto step = controller_step(ControllerState::initial(5, 1), {});
  EXPECT_FALSE(step.grant.has_value());
  EXPECT_EQ(step.state.remaining_rb, 5);
  EXPECT_EQ(step.state.slot, 1);
  EXPECT_FALSE(step.record.granted_user.has_value());
}

TEST(ControllerStepTest, ArrivalOrderDoesNotMatter) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto a = controller_step(ControllerState::initial(20, seed),
                                   {{4, 2}, {1, 3}, {9, 1}, {2, 2}});
    const auto b = controller_step(ControllerState::initial(20, seed),
                                   {{9, 1}, {2, 2}, {4, 2}, {1, 3}});
    ASSERT_EQ(a.grant->user_id, b.grant->user_id);
  }
}

TEST(ControllerStepTest, RejectsProtocolViolations) {
  EXPECT_THROW(controller_step(ControllerState::initial(3, 1), {{1, 4}}),
               ProtocolError);
  EXPECT_THROW(controller_step(ControllerState::initial(9, 1), {{1, 2}, {1, 2}}),
               ProtocolError);
  EXPECT_THROW(controller_step(ControllerState::initial(9, 1), {{1, 0}}),
               ProtocolError);
  auto granted = controller_step(ControllerState::initial(9, 1), {{1, 2}});
  EXPECT_THROW(controller_step(granted.state, {{1, 2}}), ProtocolError);
}

TEST(RunSfaTest, ThreeUsersCapacityFive) {
  const std::vector<DemandResult> demands = {Demand(2), Demand(2), Demand(2)};
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto run = run_sfa(std::span<const DemandResult>(demands), 5, seed);
    ASSERT_EQ(run.grant_count(), 2);
    ASSERT_EQ(run.trace.size(), 2u);
    ASSERT_EQ(run.remaining_rb, 1);
    int local = 0;
    for (auto a : run.assignment) local += a == 0 ? 1 : 0;
    ASSERT_EQ(local, 1);
    for (const auto& agent : run.agents) {
      ASSERT_TRUE(agent.phase == AgentPhase::kGranted ||
                  agent.phase == AgentPhase::kWithdrawn);
    }
  }
}

TEST(RunSfaTest, SlackCapacityGrantsEveryFeasibleUser) {
  const std::vector<DemandResult> demands = {
      Demand(3), LocalOnly(LocalReason::kNoFiniteEquilibrium), Demand(1),
      Demand(4), LocalOnly(LocalReason::kRemoteInfeasible)};
  const auto run = run_sfa(std::span<const DemandResult>(demands), 8, 3);
  EXPECT_EQ(run.grant_count(), 3);
  EXPECT_EQ(run.trace.size(), 3u);
  EXPECT_EQ(run.assignment, (std::vector<std::int64_t>{3, 0, 1, 4, 0}));
  EXPECT_EQ(run.agents[1].phase, AgentPhase::kLocalOnly);
  EXPECT_EQ(run.agents[4].phase, AgentPhase::kLocalOnly);
}

TEST(RunSfaTest, ZeroCapacityAdmitsNobody) {
  const std::vector<DemandResult> demands = {Demand(1), Demand(2)};
  const auto run = run_sfa(std::span<const DemandResult>(demands), 0, 3);
  EXPECT_TRUE(run.trace.empty());
  EXPECT_EQ(run.assignment, (std::vector<std::int64_t>{0, 0}));

  std::mt19937_64 gen(8);
  const auto users = testing::random_instance(gen, 6);
  const auto real = run_sfa(std::span<const UserParams>(users), 0, 3);
  EXPECT_EQ(real.grant_count(), 0);
}

TEST(RunSfaTest, MessagesFollowTheProtocol) {
  std::mt19937_64 gen(12);
  const auto users = testing::random_instance(gen, 12);
  const auto run = run_sfa(std::span<const UserParams>(users), 15, 77);
  ASSERT_EQ(run.messages.size(), run.trace.size());
  for (std::size_t s = 0; s < run.trace.size(); ++s) {
    std::map<UserId, std::int64_t> bsr;
    int grants = 0;
    for (const auto& m : run.messages[s]) {
      if (const auto* r = std::get_if<BufferStateReport>(&m)) bsr[r->user_id] = r->demand_rb;
      if (const auto* resp = std::get_if<AvailabilityResponse>(&m)) {
        EXPECT_EQ(resp->remaining_rb, run.trace[s].remaining_rb_before);
      }
      if (const auto* g = std::get_if<UplinkGrant>(&m)) {
        ++grants;
        ASSERT_TRUE(bsr.contains(g->user_id));
        EXPECT_EQ(bsr[g->user_id], g->granted_rb);
      }
    }
    EXPECT_EQ(grants, 1);
  }
}

TEST(RunSfaPropertyTest, ConservationGrantShapeAndTermination) {
  std::mt19937_64 gen(13);
  for (int i = 0; i < 500; ++i) {
    const auto n = 1 + gen() % 30;
    const auto users = testing::random_instance(gen, n);
    const std::int64_t capacity = static_cast<std::int64_t>(gen() % 60);
    const auto run = run_sfa(std::span<const UserParams>(users), capacity, gen());
    std::vector<DemandResult> demands;
    for (const auto& u : users) {
      demands.push_back(min_required_rb(u, std::max<std::int64_t>(capacity, 1)));
    }
    ASSERT_EQ(testing::trace_violations(run, demands), 0u);
    ASSERT_LE(run.trace.size(), n + 1);
    for (std::size_t k = 0; k < n; ++k) {
      const auto a = run.assignment[k];
      ASSERT_TRUE(a == 0 || (demands[k].min_rb && a == *demands[k].min_rb));
    }
    // Nobody who still fits was left waiting.
    for (const auto& agent : run.agents) {
      if (agent.phase == AgentPhase::kWithdrawn) {
        ASSERT_GT(*agent.demand.min_rb, run.remaining_rb);
      }
    }
  }
}

TEST(RunSfaPropertyTest, DeterministicForSeed) {
  std::mt19937_64 gen(14);
  const auto users = testing::random_instance(gen, 25);
  const auto a = run_sfa(std::span<const UserParams>(users), 30, 1234);
  const auto b = run_sfa(std::span<const UserParams>(users), 30, 1234);
  EXPECT_EQ(a.assignment, b.assignment);
  ASSERT_EQ(a.trace.size(), b.trace.size());
  for (std::size_t s = 0; s < a.trace.size(); ++s) {
    EXPECT_EQ(a.trace[s].granted_user, b.trace[s].granted_user);
    EXPECT_EQ(a.trace[s].requesters, b.trace[s].requesters);
  }
  std::set<std::vector<std::int64_t>> outcomes;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    outcomes.insert(run_sfa(std::span<const UserParams>(users), 30, seed).assignment);
  }
  EXPECT_GT(outcomes.size(), 1u);
}

}  // namespace
}  // namespace vecc::sfa
