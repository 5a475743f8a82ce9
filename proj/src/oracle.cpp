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

#include "vecc/oracle.hpp"

#include <algorithm>
#include <string>

#include "vecc/allocation.hpp"

namespace vecc::oracle {

namespace {

std::vector<std::size_t> eligible_users(std::span<const OracleUser> users) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < users.size(); ++i) {
    if (users[i].demand_rb) out.push_back(i);
  }
  return out;
}

OracleSolution finish(std::span<const OracleUser> users,
                      std::vector<std::size_t> chosen) {
  std::sort(chosen.begin(), chosen.end());
  OracleSolution s;
  s.offloader_count = chosen.size();
  for (auto i : chosen) s.capacity_used += *users[i].demand_rb;
  s.total_overhead = total_overhead(users, chosen);
  s.offloader_set = std::move(chosen);
  return s;
}

// Lexicographic value of a partial solution: admissions first, then the
// overhead saved relative to everyone running locally.
struct Value {
  std::int64_t count = -1;  // -1 marks an unreachable state
  double saving = 0.0;

  bool reachable() const { return count >= 0; }
  bool better_than(const Value& o) const {
    if (count != o.count) return count > o.count;
    return saving > o.saving;
  }
};

}  // namespace

std::vector<OracleUser> make_instance(std::span<const UserParams> users,
                                      std::int64_t capacity) {
  std::vector<OracleUser> out;
  out.reserve(users.size());
  for (const auto& u : users) {
    OracleUser o;
    o.local_overhead = local_overhead(u).weighted;
    if (capacity >= 1) {
      const auto demand = min_required_rb(u, capacity);
      if (demand.min_rb) {
        o.demand_rb = demand.min_rb;
        o.offload_overhead = offload_overhead(u, *demand.min_rb).weighted;
      }
    }
    out.push_back(o);
  }
  return out;
}

double total_overhead(std::span<const OracleUser> users,
                      std::span<const std::size_t> offloaders) {
  std::vector<bool> off(users.size(), false);
  for (auto i : offloaders) off.at(i) = true;
  double total = 0.0;
  for (std::size_t i = 0; i < users.size(); ++i) {
    total += off[i] ? users[i].offload_overhead : users[i].local_overhead;
  }
  return total;
}

OracleSolution solve_exact(std::span<const OracleUser> users,
                           std::int64_t capacity, std::size_t eligible_bound) {
  if (capacity < 0) throw std::invalid_argument("capacity must be >= 0");
  const auto items = eligible_users(users);
  if (items.size() > eligible_bound) {
    throw InstanceTooLarge(std::to_string(items.size()) +
                           " eligible users exceed the oracle bound of " +
                           std::to_string(eligible_bound));
  }

  // best[k][c]: best value using the first k eligible users with exactly
  // c RBs consumed.
  const auto cap = static_cast<std::size_t>(capacity);
  std::vector<std::vector<Value>> best(items.size() + 1,
                                       std::vector<Value>(cap + 1));
  best[0][0] = {0, 0.0};
  for (std::size_t k = 0; k < items.size(); ++k) {
    const auto& user = users[items[k]];
    const auto w = static_cast<std::size_t>(*user.demand_rb);
    const double saving = user.local_overhead - user.offload_overhead;
    for (std::size_t c = 0; c <= cap; ++c) {
      Value v = best[k][c];
      if (c >= w && best[k][c - w].reachable()) {
        const Value take{best[k][c - w].count + 1, best[k][c - w].saving + saving};
        if (!v.reachable() || take.better_than(v)) v = take;
      }
      best[k + 1][c] = v;
    }
  }

  std::size_t c_best = 0;
  for (std::size_t c = 1; c <= cap; ++c) {
    if (best[items.size()][c].reachable() &&
        best[items.size()][c].better_than(best[items.size()][c_best])) {
      c_best = c;
    }
  }

  std::vector<std::size_t> chosen;
  std::size_t c = c_best;
  for (std::size_t k = items.size(); k > 0; --k) {
    const Value& here = best[k][c];
    const Value& skip = best[k - 1][c];
    // Taking item k-1 was necessary iff skipping it does not reproduce the
    // stored value.
    if (skip.reachable() && skip.count == here.count && skip.saving == here.saving) {
      continue;
    }
    chosen.push_back(items[k - 1]);
    c -= static_cast<std::size_t>(*users[items[k - 1]].demand_rb);
  }
  return finish(users, std::move(chosen));
}

OracleSolution solve_exhaustive(std::span<const OracleUser> users,
                                std::int64_t capacity) {
  if (capacity < 0) throw std::invalid_argument("capacity must be >= 0");
  const auto items = eligible_users(users);
  if (items.size() > kExhaustiveBound) {
    throw InstanceTooLarge(std::to_string(items.size()) +
                           " eligible users exceed the enumeration bound of " +
                           std::to_string(kExhaustiveBound));
  }

  std::vector<std::size_t> best_set;
  double best_total = total_overhead(users, best_set);
  std::vector<std::size_t> subset;
  for (std::uint32_t mask = 1; mask < (1u << items.size()); ++mask) {
    subset.clear();
    std::int64_t used = 0;
    for (std::size_t k = 0; k < items.size(); ++k) {
      if (mask & (1u << k)) {
        subset.push_back(items[k]);
        used += *users[items[k]].demand_rb;
      }
    }
    if (used > capacity) continue;
    if (subset.size() < best_set.size()) continue;
    const double total = total_overhead(users, subset);
    if (subset.size() > best_set.size() || total < best_total) {
      best_set = subset;
      best_total = total;
    }
  }
  return finish(users, std::move(best_set));
}

Gap gap(std::span<const OracleUser> users,
        std::span<const std::int64_t> sfa_assignment,
        const OracleSolution& oracle_result) {
  if (sfa_assignment.size() != users.size()) {
    throw std::invalid_argument("assignment and instance differ in size");
  }
  std::vector<std::size_t> sfa_set;
  for (std::size_t i = 0; i < sfa_assignment.size(); ++i) {
    if (sfa_assignment[i] > 0) sfa_set.push_back(i);
  }
  Gap g;
  g.count_gap = static_cast<std::int64_t>(oracle_result.offloader_count) -
                static_cast<std::int64_t>(sfa_set.size());
  g.overhead_gap = total_overhead(users, sfa_set) - oracle_result.total_overhead;
  return g;
}

}  // namespace vecc::oracle
