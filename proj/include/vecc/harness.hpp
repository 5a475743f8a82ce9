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

#ifndef VECC_HARNESS_HPP_
#define VECC_HARNESS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vecc/allocation.hpp"
#include "vecc/oracle.hpp"
#include "vecc/scenario.hpp"
#include "vecc/sfa.hpp"

namespace vecc::harness {

/// A caller-side precondition failed (trial count, oracle bound, ...).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Outcome of one simulated decision process. "Time" and "energy" sums are
/// unweighted totals over users; "overhead" is the weighted total.
struct RunMetrics {
  std::int64_t user_count = 0;
  std::int64_t offloader_count = 0;
  std::vector<std::int64_t> per_type_offloader_counts;  // by task type
  double total_overhead_local_baseline = 0.0;
  double total_overhead_final = 0.0;
  double time_sum_baseline = 0.0;
  double time_sum_final = 0.0;
  double energy_sum_baseline = 0.0;
  double energy_sum_final = 0.0;
  double reduction_total = 0.0;   // percent
  double reduction_time = 0.0;    // percent
  double reduction_energy = 0.0;  // percent
  std::int64_t deadline_violations = 0;
  std::int64_t slots_used = 0;
  std::int64_t capacity_used = 0;
};

/// 100 * (baseline - final) / baseline, or 0 for a zero baseline.
double reduction_percent(double baseline, double final_value);

/// Flattens metrics into (name, value) pairs in a fixed column order.
std::vector<std::pair<std::string, double>> metric_fields(const RunMetrics& m);

struct SingleRun {
  ScenarioConfig config;
  std::uint64_t seed = 0;
  std::vector<GeneratedUser> users;
  std::vector<DemandResult> demands;
  std::vector<OverheadBreakdown> local;  // all-local baseline per user
  std::vector<OverheadBreakdown> final;  // after the decision process
  sfa::SfaRun sfa;
  RunMetrics metrics;
};

/// Generates a scenario, runs the allocation protocol and evaluates every
/// user at its final decision.
SingleRun run_single(const ScenarioConfig& config, std::uint64_t seed);

/// Trial i of a campaign uses seed derive_seed(base_seed, i).
std::uint64_t trial_seed(std::uint64_t base_seed, std::size_t trial);

struct TrialResult {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  RunMetrics metrics;
};

struct FieldSummary {
  std::string name;
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation; 0 for a single trial
};

struct CampaignReport {
  ScenarioConfig config;
  std::uint64_t base_seed = 0;
  std::vector<TrialResult> trials;
  std::vector<FieldSummary> summary;  // one entry per metric_fields column

  const FieldSummary& field(const std::string& name) const;
};

/// Runs `trials` seeded repetitions of run_single. Throws
/// PreconditionError when trials == 0.
CampaignReport run_campaign(const ScenarioConfig& config, std::size_t trials,
                            std::uint64_t base_seed);

struct CompareTrial {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::int64_t sfa_count = 0;
  std::int64_t oracle_count = 0;
  double sfa_overhead = 0.0;
  double oracle_overhead = 0.0;
  oracle::Gap gap;
};

struct CompareReport {
  ScenarioConfig config;
  std::uint64_t base_seed = 0;
  std::size_t eligible_bound = 0;
  std::vector<CompareTrial> trials;
};

/// Per trial: the exact optimum and one SFA run on the same instance.
/// Throws PreconditionError when trials == 0 or user_count exceeds
/// eligible_bound.
CompareReport run_oracle_compare(
    const ScenarioConfig& config, std::size_t trials, std::uint64_t base_seed,
    std::size_t eligible_bound = oracle::kDefaultEligibleBound);

}  // namespace vecc::harness

#endif  // VECC_HARNESS_HPP_
