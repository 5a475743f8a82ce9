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

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "test_support.hpp"

namespace vecc {
namespace {

RadioLink ExampleLink() { return RadioLink(0.1, 0.01, 1e-13, 5); }
ComputeProfile ExampleProfile() { return ComputeProfile(0.5e9, 2.5e-9, 1e10); }

TEST(EquilibriumRbTest, WorkedExample) {
  const auto a = equilibrium_rb(ComputeTask(4e7, 1e9, 1.0), ExampleProfile(),
                                ExampleLink(), Weights(0.5, 0.5));
  ASSERT_TRUE(a.has_value());
  EXPECT_NEAR(*a, 0.33447777295852649, 1e-12);
}

TEST(EquilibriumRbTest, SlowEdgeUnderTimeWeightsNeverBreaksEven) {
  const auto a = equilibrium_rb(ComputeTask(4e7, 1e9, 1.0),
                                ComputeProfile(2e9, 2.5e-9, 1e9), ExampleLink(),
                                Weights(1.0, 0.0));
  EXPECT_FALSE(a.has_value());
}

TEST(EquilibriumRbTest, LargeTailEnergyNeverBreaksEven) {
  const auto a = equilibrium_rb(ComputeTask(4e7, 1e8, 1.0), ExampleProfile(),
                                RadioLink(0.1, 0.01, 1e-13, 5, kResourceBlockHz, 1.0),
                                Weights(0.0, 1.0));
  EXPECT_FALSE(a.has_value());
}

TEST(EquilibriumRbTest, NothingToSendIsZero) {
  const auto a = equilibrium_rb(ComputeTask(0.0, 1e9, 1.0), ExampleProfile(),
                                ExampleLink(), Weights(0.5, 0.5));
  ASSERT_TRUE(a.has_value());
  EXPECT_EQ(*a, 0.0);
}

TEST(DeadlineRbTest, WorkedExample) {
  const ComputeTask task(4e7, 1e9, 1.0);
  const auto a = deadline_rb(task, ExampleProfile(), ExampleLink());
  ASSERT_TRUE(a.has_value());
  EXPECT_NEAR(*a, 1.4865678798156733, 1e-12);
  // Cross-check against the time equation: 2 RBs meet the deadline, 1 does not.
  const Weights w(0.5, 0.5);
  EXPECT_LE(offload_overhead(task, ExampleProfile(), ExampleLink(), w, 2).time_s, 1.0);
  EXPECT_GT(offload_overhead(task, ExampleProfile(), ExampleLink(), w, 1).time_s, 1.0);
}

TEST(DeadlineRbTest, LooseDeadline) {
  const auto a = deadline_rb(ComputeTask(4e7, 1e9, 10.0), ExampleProfile(), ExampleLink());
  ASSERT_TRUE(a.has_value());
  EXPECT_NEAR(*a, 0.13514253452869757, 1e-13);
}

TEST(DeadlineRbTest, ZeroTransmitBudgetIsInfeasible) {
  // deadline * edge_speed == compute_units exactly.
  EXPECT_FALSE(deadline_rb(ComputeTask(4e7, 1e10, 1.0), ExampleProfile(),
                           ExampleLink())
                   .has_value());
  EXPECT_FALSE(deadline_rb(ComputeTask(4e7, 2e10, 1.0), ExampleProfile(),
                           ExampleLink())
                   .has_value());
}

TEST(MinRequiredRbTest, WorkedExample) {
  const auto d = min_required_rb(ComputeTask(4e7, 1e9, 1.0), ExampleProfile(),
                                 ExampleLink(), Weights(0.5, 0.5), 100);
  ASSERT_TRUE(d.offloadable());
  EXPECT_EQ(*d.equilibrium_rb, 1);
  EXPECT_EQ(*d.deadline_rb, 2);
  EXPECT_EQ(*d.min_rb, 2);
  EXPECT_FALSE(d.local_reason.has_value());
}

TEST(MinRequiredRbTest, SubUnitDemandsClampToOne) {
  const auto d = min_required_rb(ComputeTask(4e7, 1e9, 10.0), ExampleProfile(),
                                 ExampleLink(), Weights(0.5, 0.5), 100);
  ASSERT_TRUE(d.offloadable());
  EXPECT_LT(*d.raw_equilibrium, 1.0);
  EXPECT_LT(*d.raw_deadline, 1.0);
  EXPECT_EQ(*d.min_rb, 1);

  const auto zero = min_required_rb(ComputeTask(0.0, 1e9, 1.0), ExampleProfile(),
                                    ExampleLink(), Weights(0.5, 0.5), 100);
  ASSERT_TRUE(zero.offloadable());
  EXPECT_EQ(*zero.min_rb, 1);
}

TEST(MinRequiredRbTest, ExceedsCapacity) {
  // Weak link: demand well above a 5 RB cell.
  const RadioLink weak(0.1, 1e-12, 1e-13, 1);
  const auto d = min_required_rb(ComputeTask(8e7, 2e9, 2.0), ExampleProfile(),
                                 weak, Weights(0.5, 0.5), 5);
  ASSERT_FALSE(d.offloadable());
  EXPECT_EQ(*d.local_reason, LocalReason::kExceedsSystemCapacity);
  const auto roomy = min_required_rb(ComputeTask(8e7, 2e9, 2.0), ExampleProfile(),
                                     weak, Weights(0.5, 0.5), 100000);
  ASSERT_TRUE(roomy.offloadable());
  EXPECT_GT(*roomy.min_rb, 5);
}

TEST(MinRequiredRbTest, DegenerateReasons) {
  const auto infeasible = min_required_rb(ComputeTask(4e7, 1e10, 1.0),
                                          ExampleProfile(), ExampleLink(),
                                          Weights(0.5, 0.5), 100);
  EXPECT_EQ(*infeasible.local_reason, LocalReason::kRemoteInfeasible);
  EXPECT_FALSE(infeasible.min_rb.has_value());

  const auto never = min_required_rb(ComputeTask(4e7, 1e9, 1.0),
                                     ComputeProfile(2e9, 2.5e-9, 1e9),
                                     ExampleLink(), Weights(1.0, 0.0), 100);
  EXPECT_EQ(*never.local_reason, LocalReason::kNoFiniteEquilibrium);
  EXPECT_THROW(min_required_rb(ComputeTask(4e7, 1e9, 1.0), ExampleProfile(),
                               ExampleLink(), Weights(0.5, 0.5), 0),
               std::invalid_argument);
}

TEST(MinRequiredRbTest, DemandIsMaxOfCeilings) {
  std::mt19937_64 gen(21);
  for (int i = 0; i < 5000; ++i) {
    const auto u = testing::random_user(gen);
    const auto d = min_required_rb(u, 100);
    if (!d.offloadable()) continue;
    const auto expected = std::max<std::int64_t>(
        {1, static_cast<std::int64_t>(std::ceil(*d.raw_equilibrium)),
         static_cast<std::int64_t>(std::ceil(*d.raw_deadline))});
    ASSERT_EQ(*d.min_rb, expected);
  }
}

// Offloading at ceil(a*) or more never costs more than running locally, and
// one block fewer does.
TEST(AllocationPropertyTest, BreakEven) {
  std::mt19937_64 gen(1);
  int checked = 0;
  for (int i = 0; i < 10000; ++i) {
    const auto u = testing::random_user(gen);
    const auto raw = equilibrium_rb(u.task, u.profile, u.link, u.weights);
    if (!raw) continue;
    ++checked;
    const double local = local_overhead(u).weighted;
    const auto a = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(*raw)));
    for (std::int64_t k = a; k < a + 8; ++k) {
      ASSERT_LE(offload_overhead(u, k).weighted, local * (1 + 1e-9));
    }
    if (*raw > 1.0) {
      ASSERT_GT(offload_overhead(u, a - 1).weighted, local);
    }
  }
  EXPECT_GT(checked, 5000);
}

TEST(AllocationPropertyTest, DeadlineTightness) {
  std::mt19937_64 gen(2);
  for (int i = 0; i < 10000; ++i) {
    const auto u = testing::random_user(gen);
    const auto raw = deadline_rb(u.task, u.profile, u.link);
    if (!raw) continue;
    const double deadline = u.task.deadline_s();
    const auto a = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(*raw)));
    for (std::int64_t k = a; k < a + 8; ++k) {
      ASSERT_LE(offload_overhead(u, k).time_s, deadline * (1 + 1e-9));
    }
    if (a - 1 >= 1) {
      ASSERT_GT(offload_overhead(u, a - 1).time_s, deadline);
    }
  }
}

TEST(AllocationPropertyTest, UnroundedEquilibriumIsFixedPoint) {
  std::mt19937_64 gen(4);
  for (int i = 0; i < 10000; ++i) {
    const auto u = testing::random_user(gen);
    const auto raw = equilibrium_rb(u.task, u.profile, u.link, u.weights);
    if (!raw || *raw == 0.0) continue;
    const double local = local_overhead(u).weighted;
    const double off =
        offload_overhead_continuous(u.task, u.profile, u.link, u.weights, *raw).weighted;
    ASSERT_NEAR(off, local, 1e-9 * local);
  }
}

TEST(AllocationPropertyTest, ClosedFormMatchesBisection) {
  std::mt19937_64 gen(6);
  int checked = 0;
  while (checked < 1000) {
    const auto u = testing::random_user(gen);
    const auto raw = equilibrium_rb(u.task, u.profile, u.link, u.weights);
    if (!raw || *raw == 0.0) continue;
    ++checked;
    ASSERT_NEAR(testing::bisect_equilibrium(u), *raw, 1e-6 * *raw);
  }
}

}  // namespace
}  // namespace vecc
