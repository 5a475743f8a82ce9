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

#include "vecc/harness.hpp"

#include <cmath>
#include <string>

#include "vecc/rng.hpp"

namespace vecc::harness {

double reduction_percent(double baseline, double final_value) {
  if (baseline == 0.0) return 0.0;
  return 100.0 * (baseline - final_value) / baseline;
}

std::vector<std::pair<std::string, double>> metric_fields(const RunMetrics& m) {
  std::vector<std::pair<std::string, double>> f = {
      {"user_count", static_cast<double>(m.user_count)},
      {"offloader_count", static_cast<double>(m.offloader_count)},
  };
  for (std::size_t t = 0; t < m.per_type_offloader_counts.size(); ++t) {
    f.emplace_back("offloaders_type" + std::to_string(t + 1),
                   static_cast<double>(m.per_type_offloader_counts[t]));
  }
  f.insert(f.end(),
           {
               {"total_overhead_local_baseline", m.total_overhead_local_baseline},
               {"total_overhead_final", m.total_overhead_final},
               {"time_sum_baseline", m.time_sum_baseline},
               {"time_sum_final", m.time_sum_final},
               {"energy_sum_baseline", m.energy_sum_baseline},
               {"energy_sum_final", m.energy_sum_final},
               {"reduction_total", m.reduction_total},
               {"reduction_time", m.reduction_time},
               {"reduction_energy", m.reduction_energy},
               {"deadline_violations", static_cast<double>(m.deadline_violations)},
               {"slots_used", static_cast<double>(m.slots_used)},
               {"capacity_used", static_cast<double>(m.capacity_used)},
           });
  return f;
}

SingleRun run_single(const ScenarioConfig& config, std::uint64_t seed) {
  SingleRun run;
  run.config = config;
  run.seed = seed;
  run.users = generate_users(config, seed);
  const auto params = user_params(run.users);

  run.demands.reserve(params.size());
  for (const auto& u : params) {
    run.demands.push_back(min_required_rb(u, config.rb_capacity));
  }
  run.sfa = sfa::run_sfa(std::span<const DemandResult>(run.demands),
                         config.rb_capacity, seed);

  RunMetrics& m = run.metrics;
  m.user_count = static_cast<std::int64_t>(params.size());
  m.per_type_offloader_counts.assign(config.task_catalog.size(), 0);
  for (std::size_t i = 0; i < params.size(); ++i) {
    const auto& u = params[i];
    const auto local = local_overhead(u);
    const auto rb = run.sfa.assignment[i];
    const auto final = rb > 0 ? offload_overhead(u, rb) : local;
    run.local.push_back(local);
    run.final.push_back(final);

    m.total_overhead_local_baseline += local.weighted;
    m.total_overhead_final += final.weighted;
    m.time_sum_baseline += local.time_s;
    m.time_sum_final += final.time_s;
    m.energy_sum_baseline += local.energy_j;
    m.energy_sum_final += final.energy_j;
    if (final.time_s > u.task.deadline_s()) ++m.deadline_violations;
    if (rb > 0) {
      ++m.offloader_count;
      ++m.per_type_offloader_counts[run.users[i].task_type];
      m.capacity_used += rb;
    }
  }
  m.reduction_total = reduction_percent(m.total_overhead_local_baseline,
                                        m.total_overhead_final);
  m.reduction_time = reduction_percent(m.time_sum_baseline, m.time_sum_final);
  m.reduction_energy =
      reduction_percent(m.energy_sum_baseline, m.energy_sum_final);
  m.slots_used = static_cast<std::int64_t>(run.sfa.trace.size());
  return run;
}

std::uint64_t trial_seed(std::uint64_t base_seed, std::size_t trial) {
  return derive_seed(base_seed, trial);
}

const FieldSummary& CampaignReport::field(const std::string& name) const {
  for (const auto& f : summary) {
    if (f.name == name) return f;
  }
  throw std::out_of_range("no campaign field named " + name);
}

CampaignReport run_campaign(const ScenarioConfig& config, std::size_t trials,
                            std::uint64_t base_seed) {
  if (trials == 0) throw PreconditionError("campaign needs at least one trial");
  config.validate();
  CampaignReport report;
  report.config = config;
  report.base_seed = base_seed;
  report.trials.reserve(trials);
  for (std::size_t t = 0; t < trials; ++t) {
    const auto seed = trial_seed(base_seed, t);
    report.trials.push_back({t, seed, run_single(config, seed).metrics});
  }

  const auto names = metric_fields(report.trials.front().metrics);
  for (std::size_t k = 0; k < names.size(); ++k) {
    double sum = 0.0;
    for (const auto& tr : report.trials) sum += metric_fields(tr.metrics)[k].second;
    const double mean = sum / static_cast<double>(trials);
    double ss = 0.0;
    for (const auto& tr : report.trials) {
      const double d = metric_fields(tr.metrics)[k].second - mean;
      ss += d * d;
    }
    const double sd =
        trials > 1 ? std::sqrt(ss / static_cast<double>(trials - 1)) : 0.0;
    report.summary.push_back({names[k].first, mean, sd});
  }
  return report;
}

CompareReport run_oracle_compare(const ScenarioConfig& config,
                                 std::size_t trials, std::uint64_t base_seed,
                                 std::size_t eligible_bound) {
  if (trials == 0) throw PreconditionError("comparison needs at least one trial");
  if (static_cast<std::size_t>(config.user_count) > eligible_bound) {
    throw PreconditionError(
        "user_count " + std::to_string(config.user_count) +
        " exceeds the oracle bound of " + std::to_string(eligible_bound) +
        " users; lower user_count or raise --oracle-bound");
  }
  config.validate();
  CompareReport report;
  report.config = config;
  report.base_seed = base_seed;
  report.eligible_bound = eligible_bound;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto seed = trial_seed(base_seed, t);
    const auto params = user_params(generate_users(config, seed));
    const auto instance = oracle::make_instance(params, config.rb_capacity);
    const auto best =
        oracle::solve_exact(instance, config.rb_capacity, eligible_bound);
    const auto sfa_run = sfa::run_sfa(std::span<const UserParams>(params),
                                      config.rb_capacity, seed);

    CompareTrial ct;
    ct.trial = t;
    ct.seed = seed;
    ct.gap = oracle::gap(instance, sfa_run.assignment, best);
    ct.sfa_count = sfa_run.grant_count();
    ct.oracle_count = static_cast<std::int64_t>(best.offloader_count);
    ct.oracle_overhead = best.total_overhead;
    std::vector<std::size_t> sfa_set;
    for (std::size_t i = 0; i < sfa_run.assignment.size(); ++i) {
      if (sfa_run.assignment[i] > 0) sfa_set.push_back(i);
    }
    ct.sfa_overhead = oracle::total_overhead(instance, sfa_set);
    report.trials.push_back(ct);
  }
  return report;
}

}  // namespace vecc::harness
