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

#include "vecc/scenario.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "json.hpp"
#include "vecc/rng.hpp"
#include "vecc/units.hpp"

namespace vecc {

using nlohmann::ordered_json;

namespace {

void check(bool ok, const std::string& what) {
  if (!ok) throw ConfigError(what);
}

struct TaskRow {
  double input_kb;
  double megacycles;
  double deadline_s;
};

constexpr TaskRow kTable1Tasks[] = {
    {1000.0, 100.0, 0.2},
    {2000.0, 300.0, 0.6},
    {5000.0, 1000.0, 1.0},
    {10000.0, 2000.0, 2.0},
};

ComputeTask task_from_row(const TaskRow& r) {
  return ComputeTask(units::kilobytes_to_bits(r.input_kb),
                     units::megacycles_to_cycles(r.megacycles), r.deadline_s);
}

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {
      "cell_radius_m",    "user_count",        "bandwidth_mhz",
      "rb_capacity",      "carriers",          "tx_power_mw",
      "noise_dbm",        "path_loss_exponent", "min_distance_m",
      "rb_bandwidth_khz", "task_catalog",      "local_speed_ghz",
      "energy_per_megacycle_j", "edge_speed_ghz", "tail_energy_j",
      "weight_choices",   "seed"};
  return keys;
}

ScenarioConfig parse(const ordered_json& doc) {
  check(doc.is_object(), "config must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    check(known_keys().contains(key), "unknown config key '" + key + "'");
  }

  ScenarioConfig c = default_table1_config(20);
  const bool has_bandwidth = doc.contains("bandwidth_mhz") && !doc["bandwidth_mhz"].is_null();
  const bool has_capacity = doc.contains("rb_capacity");
  if (has_bandwidth) {
    c.bandwidth_mhz = doc["bandwidth_mhz"].get<int>();
    c.rb_capacity = rb_capacity_for_bandwidth(*c.bandwidth_mhz);
    if (has_capacity) {
      check(doc["rb_capacity"].get<std::int64_t>() == c.rb_capacity,
            "rb_capacity " + doc["rb_capacity"].dump() +
                " is inconsistent with bandwidth_mhz " +
                std::to_string(*c.bandwidth_mhz));
    }
  } else if (has_capacity) {
    c.bandwidth_mhz.reset();
    c.rb_capacity = doc["rb_capacity"].get<std::int64_t>();
  }

  auto get = [&doc](const char* key, auto& field) {
    if (doc.contains(key)) field = doc[key].get<std::decay_t<decltype(field)>>();
  };
  get("cell_radius_m", c.cell_radius_m);
  get("user_count", c.user_count);
  get("carriers", c.carriers);
  get("path_loss_exponent", c.path_loss_exponent);
  get("min_distance_m", c.min_distance_m);
  get("tail_energy_j", c.tail_energy_j);
  get("seed", c.seed);
  if (doc.contains("tx_power_mw")) {
    c.tx_power_w = units::milliwatts_to_watts(doc["tx_power_mw"].get<double>());
  }
  if (doc.contains("noise_dbm")) {
    c.noise_w = units::dbm_to_watts(doc["noise_dbm"].get<double>());
  }
  if (doc.contains("rb_bandwidth_khz")) {
    c.rb_bandwidth_hz = doc["rb_bandwidth_khz"].get<double>() * 1000.0;
  }
  if (doc.contains("energy_per_megacycle_j")) {
    c.energy_per_unit = units::joules_per_megacycle_to_per_cycle(
        doc["energy_per_megacycle_j"].get<double>());
  }
  if (doc.contains("edge_speed_ghz")) {
    c.edge_speed = units::gigahertz_to_hertz(doc["edge_speed_ghz"].get<double>());
  }
  if (doc.contains("local_speed_ghz")) {
    c.local_speed_choices.clear();
    for (const auto& v : doc["local_speed_ghz"]) {
      c.local_speed_choices.push_back(units::gigahertz_to_hertz(v.get<double>()));
    }
  }
  if (doc.contains("task_catalog")) {
    c.task_catalog.clear();
    for (const auto& t : doc["task_catalog"]) {
      for (const auto& [key, value] : t.items()) {
        check(key == "input_kb" || key == "compute_megacycles" || key == "deadline_s",
              "unknown task_catalog key '" + key + "'");
      }
      try {
        c.task_catalog.push_back(task_from_row({t.at("input_kb").get<double>(),
                                                t.at("compute_megacycles").get<double>(),
                                                t.at("deadline_s").get<double>()}));
      } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("task_catalog: ") + e.what());
      }
    }
  }
  if (doc.contains("weight_choices")) {
    c.weight_choices.clear();
    for (const auto& w : doc["weight_choices"]) {
      check(w.is_array() && w.size() == 2,
            "weight_choices entries must be [time_weight, energy_weight]");
      try {
        c.weight_choices.emplace_back(w[0].get<double>(), w[1].get<double>());
      } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("weight_choices: ") + e.what());
      }
    }
  }
  c.validate();
  return c;
}

}  // namespace

std::int64_t rb_capacity_for_bandwidth(int bandwidth_mhz) {
  switch (bandwidth_mhz) {
    case 10: return 50;
    case 15: return 75;
    case 20: return 100;
    default:
      throw ConfigError("unsupported bandwidth " + std::to_string(bandwidth_mhz) +
                        " MHz (expected 10, 15 or 20)");
  }
}

ScenarioConfig default_table1_config(int bandwidth_mhz) {
  ScenarioConfig c;
  c.bandwidth_mhz = bandwidth_mhz;
  c.rb_capacity = rb_capacity_for_bandwidth(bandwidth_mhz);
  c.tx_power_w = units::milliwatts_to_watts(100.0);
  c.noise_w = units::dbm_to_watts(-100.0);
  for (const auto& row : kTable1Tasks) c.task_catalog.push_back(task_from_row(row));
  c.local_speed_choices = {units::gigahertz_to_hertz(0.5),
                           units::gigahertz_to_hertz(0.8),
                           units::gigahertz_to_hertz(1.0)};
  c.energy_per_unit = units::joules_per_megacycle_to_per_cycle(0.0025);
  c.edge_speed = units::gigahertz_to_hertz(10.0);
  c.weight_choices = {Weights(0.0, 1.0), Weights(0.5, 0.5), Weights(1.0, 0.0)};
  return c;
}

void ScenarioConfig::validate() const {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  check(positive(cell_radius_m), "cell_radius_m must be > 0");
  check(user_count >= 1, "user_count must be >= 1");
  check(rb_capacity >= 1, "rb_capacity must be >= 1");
  if (bandwidth_mhz) {
    check(rb_capacity == rb_capacity_for_bandwidth(*bandwidth_mhz),
          "rb_capacity inconsistent with bandwidth_mhz");
  }
  check(carriers >= 1, "carriers must be >= 1");
  check(positive(tx_power_w), "tx_power must be > 0");
  check(positive(noise_w), "noise power must be > 0");
  check(positive(path_loss_exponent), "path_loss_exponent must be > 0");
  check(positive(min_distance_m), "min_distance_m must be > 0");
  check(min_distance_m <= cell_radius_m, "min_distance_m exceeds cell_radius_m");
  check(positive(rb_bandwidth_hz), "rb_bandwidth must be > 0");
  check(!task_catalog.empty(), "task_catalog must not be empty");
  check(!local_speed_choices.empty(), "local_speed_ghz must not be empty");
  for (double s : local_speed_choices) check(positive(s), "local speeds must be > 0");
  check(std::isfinite(energy_per_unit) && energy_per_unit >= 0.0,
        "energy_per_megacycle_j must be >= 0");
  check(positive(edge_speed), "edge_speed_ghz must be > 0");
  check(std::isfinite(tail_energy_j) && tail_energy_j >= 0.0,
        "tail_energy_j must be >= 0");
  check(!weight_choices.empty(), "weight_choices must not be empty");
}

ScenarioConfig load_config(std::string_view json_text) {
  try {
    return parse(ordered_json::parse(json_text));
  } catch (const ordered_json::exception& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  }
}

ScenarioConfig load_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return load_config(text.str());
}

std::string config_to_json(const ScenarioConfig& c) {
  ordered_json doc;
  doc["cell_radius_m"] = c.cell_radius_m;
  doc["user_count"] = c.user_count;
  doc["bandwidth_mhz"] = c.bandwidth_mhz ? ordered_json(*c.bandwidth_mhz) : ordered_json();
  doc["rb_capacity"] = c.rb_capacity;
  doc["carriers"] = c.carriers;
  doc["tx_power_mw"] = units::watts_to_milliwatts(c.tx_power_w);
  doc["noise_dbm"] = units::watts_to_dbm(c.noise_w);
  doc["path_loss_exponent"] = c.path_loss_exponent;
  doc["min_distance_m"] = c.min_distance_m;
  doc["rb_bandwidth_khz"] = c.rb_bandwidth_hz / 1000.0;
  doc["task_catalog"] = ordered_json::array();
  for (const auto& t : c.task_catalog) {
    doc["task_catalog"].push_back(
        {{"input_kb", units::bits_to_kilobytes(t.input_bits())},
         {"compute_megacycles", units::cycles_to_megacycles(t.compute_units())},
         {"deadline_s", t.deadline_s()}});
  }
  doc["local_speed_ghz"] = ordered_json::array();
  for (double s : c.local_speed_choices) {
    doc["local_speed_ghz"].push_back(units::hertz_to_gigahertz(s));
  }
  doc["energy_per_megacycle_j"] =
      units::joules_per_cycle_to_per_megacycle(c.energy_per_unit);
  doc["edge_speed_ghz"] = units::hertz_to_gigahertz(c.edge_speed);
  doc["tail_energy_j"] = c.tail_energy_j;
  doc["weight_choices"] = ordered_json::array();
  for (const auto& w : c.weight_choices) {
    doc["weight_choices"].push_back({w.time_weight(), w.energy_weight()});
  }
  doc["seed"] = c.seed;
  return doc.dump(2);
}

std::vector<GeneratedUser> generate_users(const ScenarioConfig& config,
                                          std::uint64_t seed) {
  config.validate();
  Rng rng(derive_seed(seed, kScenarioStream));
  std::vector<GeneratedUser> users;
  users.reserve(static_cast<std::size_t>(config.user_count));
  for (int i = 0; i < config.user_count; ++i) {
    // sqrt of a uniform radius fraction gives area-uniform placement.
    const double r = config.cell_radius_m * std::sqrt(rng.uniform01());
    const double theta = 2.0 * std::numbers::pi * rng.uniform01();
    const auto task = rng.uniform_index(config.task_catalog.size());
    const auto speed = rng.uniform_index(config.local_speed_choices.size());
    const auto weight = rng.uniform_index(config.weight_choices.size());

    const double distance = std::max(r, config.min_distance_m);
    const double gain = std::pow(distance, -config.path_loss_exponent);
    users.push_back(GeneratedUser{
        UserParams{
            config.task_catalog[task],
            ComputeProfile(config.local_speed_choices[speed],
                           config.energy_per_unit, config.edge_speed),
            RadioLink(config.tx_power_w, gain, config.noise_w, config.carriers,
                      config.rb_bandwidth_hz, config.tail_energy_j),
            config.weight_choices[weight]},
        r * std::cos(theta), r * std::sin(theta), distance, task, speed, weight});
  }
  return users;
}

std::vector<UserParams> user_params(const std::vector<GeneratedUser>& users) {
  std::vector<UserParams> out;
  out.reserve(users.size());
  for (const auto& u : users) out.push_back(u.params);
  return out;
}

}  // namespace vecc
