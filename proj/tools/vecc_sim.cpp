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

// Command-line front end for the VECC offloading simulator.
//
//   vecc_sim run      [--config PATH] [--seed N] [--out DIR]
//   vecc_sim campaign [--config PATH] [--seed N] [--out DIR] [--trials N]
//                     [--bandwidth 10|15|20|all]
//   vecc_sim compare  [--config PATH] [--seed N] [--out DIR] [--trials N]
//                     [--oracle-bound N]
//   vecc_sim validate-config --config PATH
//
// Exit codes: 0 success, 2 configuration error, 3 precondition violation.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vecc/harness.hpp"
#include "vecc/report.hpp"
#include "vecc/scenario.hpp"

namespace {

constexpr int kExitConfigError = 2;
constexpr int kExitPrecondition = 3;

struct CommonOptions {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string out_dir = "out";
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--config", opts.config_path, "Scenario JSON (table units)");
  cmd->add_option("--seed", opts.seed, "Seed (defaults to the config's seed)");
  cmd->add_option("--out", opts.out_dir, "Output directory")->capture_default_str();
}

vecc::ScenarioConfig load(const CommonOptions& opts) {
  if (opts.config_path.empty()) return vecc::default_table1_config(20);
  return vecc::load_config_file(opts.config_path);
}

std::uint64_t seed_of(const CommonOptions& opts, const vecc::ScenarioConfig& c) {
  return opts.seed.value_or(c.seed);
}

void print_written(const std::vector<std::filesystem::path>& paths) {
  for (const auto& p : paths) std::cout << "wrote " << p.string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vehicular edge cloud offloading simulator"};
  app.require_subcommand(1);

  CommonOptions run_opts;
  auto* run_cmd = app.add_subcommand("run", "Single traced simulation");
  add_common(run_cmd, run_opts);

  CommonOptions campaign_opts;
  std::size_t campaign_trials = 100;
  std::string bandwidth = "all";
  auto* campaign_cmd = app.add_subcommand("campaign", "Seeded multi-trial campaign");
  add_common(campaign_cmd, campaign_opts);
  campaign_cmd->add_option("--trials", campaign_trials, "Trials per setting")
      ->capture_default_str();
  campaign_cmd->add_option("--bandwidth", bandwidth, "LTE bandwidth in MHz")
      ->check(CLI::IsMember({"10", "15", "20", "all"}))
      ->capture_default_str();

  CommonOptions compare_opts;
  std::size_t compare_trials = 100;
  std::size_t oracle_bound = vecc::oracle::kDefaultEligibleBound;
  auto* compare_cmd = app.add_subcommand("compare", "SFA versus the exact optimum");
  add_common(compare_cmd, compare_opts);
  compare_cmd->add_option("--trials", compare_trials, "Trials")->capture_default_str();
  compare_cmd->add_option("--oracle-bound", oracle_bound,
                          "Largest user count the exact solver accepts")
      ->capture_default_str();

  std::string validate_path;
  auto* validate_cmd = app.add_subcommand("validate-config", "Check a scenario file");
  validate_cmd->add_option("--config", validate_path, "Scenario JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitPrecondition;
  }

  try {
    if (*run_cmd) {
      const auto config = load(run_opts);
      const auto run = vecc::harness::run_single(config, seed_of(run_opts, config));
      print_written(vecc::report::write_run_outputs(run_opts.out_dir, run));
      const auto& m = run.metrics;
      std::cout << "offloaders " << m.offloader_count << "/" << m.user_count
                << ", overhead " << vecc::report::format_number(m.total_overhead_local_baseline)
                << " -> " << vecc::report::format_number(m.total_overhead_final) << " ("
                << vecc::report::format_number(m.reduction_total) << "% lower)\n";
    } else if (*campaign_cmd) {
      const auto base = load(campaign_opts);
      const auto seed = seed_of(campaign_opts, base);
      std::vector<int> settings;
      if (bandwidth == "all") {
        settings = {10, 15, 20};
      } else {
        settings = {std::stoi(bandwidth)};
      }
      std::vector<vecc::harness::CampaignReport> reports;
      for (int bw : settings) {
        auto config = base;
        config.bandwidth_mhz = bw;
        config.rb_capacity = vecc::rb_capacity_for_bandwidth(bw);
        reports.push_back(vecc::harness::run_campaign(config, campaign_trials, seed));
        const auto& r = reports.back();
        std::cout << bw << " MHz: offloaders "
                  << vecc::report::format_number(r.field("offloader_count").mean)
                  << ", reduction total/time/energy "
                  << vecc::report::format_number(r.field("reduction_total").mean) << "% / "
                  << vecc::report::format_number(r.field("reduction_time").mean) << "% / "
                  << vecc::report::format_number(r.field("reduction_energy").mean) << "%\n";
      }
      print_written(vecc::report::write_campaign_outputs(campaign_opts.out_dir, reports));
    } else if (*compare_cmd) {
      const auto config = load(compare_opts);
      const auto report = vecc::harness::run_oracle_compare(
          config, compare_trials, seed_of(compare_opts, config), oracle_bound);
      print_written(vecc::report::write_compare_outputs(compare_opts.out_dir, report));
    } else if (*validate_cmd) {
      const auto config = vecc::load_config_file(validate_path);
      std::cout << vecc::config_to_json(config) << "\n";
    }
  } catch (const vecc::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const vecc::harness::PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const vecc::oracle::InstanceTooLarge& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
