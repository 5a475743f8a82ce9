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

#ifndef VECC_SCENARIO_HPP_
#define VECC_SCENARIO_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vecc/model.hpp"

namespace vecc {

/// Invalid or unreadable scenario configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Experiment parameters, in SI units.
struct ScenarioConfig {
  double cell_radius_m = 50.0;
  int user_count = 30;
  std::optional<int> bandwidth_mhz = 20;  // empty when rb_capacity is explicit
  std::int64_t rb_capacity = 100;
  int carriers = 5;
  double tx_power_w = 0.1;
  double noise_w = 1e-13;
  double path_loss_exponent = 2.0;
  double min_distance_m = 1.0;
  double rb_bandwidth_hz = kResourceBlockHz;
  std::vector<ComputeTask> task_catalog;
  std::vector<double> local_speed_choices;
  double energy_per_unit = 2.5e-9;  // J/cycle
  double edge_speed = 1e10;         // cycles/s
  double tail_energy_j = 0.0;
  std::vector<Weights> weight_choices;
  std::uint64_t seed = 1;

  /// Throws ConfigError describing the first violated constraint.
  void validate() const;
};

/// 10 -> 50, 15 -> 75, 20 -> 100 resource blocks. ConfigError otherwise.
std::int64_t rb_capacity_for_bandwidth(int bandwidth_mhz);

/// The experiment-table defaults at the given LTE bandwidth:
///
///   type  input   work          deadline
///   T1    1000 kB  100 Mcycles  0.2 s
///   T2    2000 kB  300 Mcycles  0.6 s
///   T3    5000 kB 1000 Mcycles  1.0 s
///   T4   10000 kB 2000 Mcycles  2.0 s
///
/// with local speeds {0.5, 0.8, 1.0} GHz, 0.0025 J/Mcycle, a 10 GHz edge
/// share and weights {(0,1), (0.5,0.5), (1,0)}.
ScenarioConfig default_table1_config(int bandwidth_mhz);

/// Parses a JSON document written in experiment-table units (kB, Megacycles,
/// GHz, mW, dBm, seconds). Missing keys take their default; unknown keys are
/// rejected. Throws ConfigError.
ScenarioConfig load_config(std::string_view json_text);
ScenarioConfig load_config_file(const std::filesystem::path& path);

/// Inverse of load_config: every key, in table units, pretty-printed.
std::string config_to_json(const ScenarioConfig& config);

struct GeneratedUser {
  UserParams params;
  double x_m = 0.0;
  double y_m = 0.0;
  double distance_m = 0.0;  // after clamping to min_distance_m
  std::size_t task_type = 0;
  std::size_t speed_choice = 0;
  std::size_t weight_choice = 0;
};

/// Places users uniformly over the cell disk and draws each user's task,
/// local speed and weights uniformly from the catalogs. Deterministic in
/// (config, seed).
std::vector<GeneratedUser> generate_users(const ScenarioConfig& config,
                                          std::uint64_t seed);

std::vector<UserParams> user_params(const std::vector<GeneratedUser>& users);

}  // namespace vecc

#endif  // VECC_SCENARIO_HPP_
