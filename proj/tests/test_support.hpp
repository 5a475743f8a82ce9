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

#ifndef VECC_TESTS_TEST_SUPPORT_HPP_
#define VECC_TESTS_TEST_SUPPORT_HPP_

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "vecc/allocation.hpp"
#include "vecc/model.hpp"
#include "vecc/oracle.hpp"
#include "vecc/scenario.hpp"
#include "vecc/sfa.hpp"

namespace vecc::testing {

/// Random user drawn from the continuous hull of the experiment-table
/// ranges: 1000-10000 kB, 100-2000 Mcycles, 0.2-2 s, 0.5-1.0 GHz local,
/// 10 GHz edge, 0.0025 J/Mcycle, 1-50 m at path-loss exponent 2, and an
/// optional tail energy up to 0.1 J.
/// Mix of the degenerate weights {0, 0.5, 1} and continuous values.
inline double random_time_weight(std::mt19937_64& gen) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const double pick = u01(gen);
  if (pick < 0.2) return 0.0;
  if (pick < 0.4) return 1.0;
  if (pick < 0.6) return 0.5;
  return u01(gen);
}

inline UserParams random_user(std::mt19937_64& gen) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  auto in = [&](double lo, double hi) { return lo + (hi - lo) * u01(gen); };
  const double distance = in(1.0, 50.0);
  const double tail = u01(gen) < 0.5 ? 0.0 : in(0.0, 0.1);
  return UserParams{
      ComputeTask(in(1000.0, 10000.0) * 8000.0, in(100.0, 2000.0) * 1e6,
                  in(0.2, 2.0)),
      ComputeProfile(in(0.5, 1.0) * 1e9, 2.5e-9, 1e10),
      RadioLink(0.1, 1.0 / (distance * distance), 1e-13, 5, kResourceBlockHz,
                tail),
      Weights::from_time_weight(random_time_weight(gen))};
}

/// Numeric root of offload(a) - local on (0, hi] by bisection. The offload
/// overhead is strictly decreasing in a whenever there is data to send.
inline double bisect_equilibrium(const UserParams& u, double hi = 1e6) {
  const double target = local_overhead(u).weighted;
  auto excess = [&](double a) {
    return offload_overhead_continuous(u.task, u.profile, u.link, u.weights, a)
               .weighted -
           target;
  };
  // Geometric bisection: the bracket spans 18 decades.
  double lo = 1e-12;
  for (int i = 0; i < 200; ++i) {
    const double mid = std::sqrt(lo * hi);
    if (excess(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return std::sqrt(lo * hi);
}

/// Small random instance for oracle / SFA comparisons.
inline std::vector<UserParams> random_instance(std::mt19937_64& gen,
                                               std::size_t users) {
  std::vector<UserParams> out;
  for (std::size_t i = 0; i < users; ++i) out.push_back(random_user(gen));
  return out;
}

/// Replays an SFA trace and checks slot conservation, single grants and
/// exact-demand grants. Returns the number of violated slots.
inline std::size_t trace_violations(const sfa::SfaRun& run,
                                    const std::vector<DemandResult>& demands) {
  std::size_t bad = 0;
  std::int64_t granted = 0;
  std::int64_t remaining = run.capacity;
  for (std::size_t s = 0; s < run.trace.size(); ++s) {
    const auto& rec = run.trace[s];
    bool ok = rec.remaining_rb_before == remaining;
    std::size_t grants = 0;
    for (const auto& m : run.messages[s]) {
      if (const auto* g = std::get_if<sfa::UplinkGrant>(&m)) {
        ++grants;
        const auto& d = demands[static_cast<std::size_t>(g->user_id)];
        ok = ok && d.min_rb && g->granted_rb == *d.min_rb;
      }
    }
    if (rec.granted_user) {
      const auto& d = demands[static_cast<std::size_t>(*rec.granted_user)];
      ok = ok && d.min_rb && rec.granted_rb == *d.min_rb;
      granted += rec.granted_rb;
    }
    ok = ok && grants <= 1 && grants == (rec.granted_user ? 1u : 0u);
    remaining = rec.remaining_rb_after;
    ok = ok && granted + remaining == run.capacity && remaining >= 0;
    if (!ok) ++bad;
  }
  return bad;
}

}  // namespace vecc::testing

#endif  // VECC_TESTS_TEST_SUPPORT_HPP_
