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

#include "vecc/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace vecc::report {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

constexpr int kJsonIndent = 2;

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

std::string canonical_cell(const std::string& cell) {
  if (cell.empty() || is_integer_text(cell)) return cell;
  const char* begin = cell.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end != begin + cell.size()) return cell;  // not a number
  return format_number(v);
}

std::string int_cell(std::int64_t v) { return std::to_string(v); }
std::string uint_cell(std::uint64_t v) { return std::to_string(v); }

// Metric values are doubles; counts are exact integers and print as such.
std::string metric_cell(double v) {
  if (v == std::trunc(v) && std::abs(v) < 1e15) {
    return int_cell(static_cast<std::int64_t>(v));
  }
  return format_number(v);
}

ordered_json metric_json(double v) {
  if (v == std::trunc(v) && std::abs(v) < 1e15) {
    return ordered_json(static_cast<std::int64_t>(v));
  }
  return ordered_json(round6(v));
}

fs::path write_text(const fs::path& dir, const std::string& name,
                    const std::string& text) {
  fs::create_directories(dir);
  const fs::path path = dir / name;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path.string());
  return path;
}

std::string dump(const ordered_json& doc) { return doc.dump(kJsonIndent) + "\n"; }

ordered_json config_json(const ScenarioConfig& config) {
  return ordered_json::parse(config_to_json(config));
}

// Which users are offloading at slot boundaries 0..S.
std::vector<std::vector<bool>> offload_states(const harness::SingleRun& run) {
  std::vector<std::vector<bool>> states;
  std::vector<bool> current(run.users.size(), false);
  states.push_back(current);
  for (const auto& rec : run.sfa.trace) {
    if (rec.granted_user) current[static_cast<std::size_t>(*rec.granted_user)] = true;
    states.push_back(current);
  }
  return states;
}

}  // namespace

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

double round6(double v) { return std::strtod(format_number(v).c_str(), nullptr); }

std::string CsvTable::to_string() const {
  std::string out;
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
  return out;
}

CsvTable CsvTable::parse(std::string_view text) {
  CsvTable t;
  bool first = true;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      cells.emplace_back(line.substr(start, comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (first) {
      t.header = std::move(cells);
      first = false;
    } else {
      if (cells.size() != t.header.size()) {
        throw std::runtime_error("CSV row width differs from header");
      }
      t.rows.push_back(std::move(cells));
    }
  }
  if (first) throw std::runtime_error("CSV text is empty");
  return t;
}

std::string canonical_csv(std::string_view text) {
  auto table = CsvTable::parse(text);
  for (auto& row : table.rows) {
    for (auto& cell : row) cell = canonical_cell(cell);
  }
  return table.to_string();
}

std::string canonical_json(std::string_view text) {
  return dump(ordered_json::parse(text));
}

std::vector<fs::path> write_run_outputs(const fs::path& dir,
                                        const harness::SingleRun& run) {
  std::vector<fs::path> written;
  const std::size_t types = run.config.task_catalog.size();

  CsvTable trace;
  trace.header = {"slot",       "remaining_rb_before", "requester_count",
                  "requesters", "granted_user",        "granted_rb",
                  "remaining_rb_after"};
  for (const auto& rec : run.sfa.trace) {
    std::string ids;
    for (std::size_t i = 0; i < rec.requesters.size(); ++i) {
      if (i) ids += ';';
      ids += std::to_string(rec.requesters[i]);
    }
    trace.rows.push_back({int_cell(rec.slot), int_cell(rec.remaining_rb_before),
                          int_cell(static_cast<std::int64_t>(rec.requesters.size())),
                          ids,
                          rec.granted_user ? int_cell(*rec.granted_user) : "",
                          int_cell(rec.granted_rb), int_cell(rec.remaining_rb_after)});
  }
  written.push_back(write_text(dir, "trace.csv", trace.to_string()));

  CsvTable users;
  users.header = {"user",           "task_type",      "distance_m",
                  "local_speed_ghz", "time_weight",   "energy_weight",
                  "raw_equilibrium_rb", "raw_deadline_rb", "min_rb",
                  "local_reason",   "assigned_rb",    "local_overhead",
                  "final_overhead", "local_time_s",   "final_time_s",
                  "local_energy_j", "final_energy_j"};
  for (std::size_t i = 0; i < run.users.size(); ++i) {
    const auto& u = run.users[i];
    const auto& d = run.demands[i];
    auto opt = [](const std::optional<double>& v) {
      return v ? format_number(*v) : std::string();
    };
    users.rows.push_back(
        {int_cell(static_cast<std::int64_t>(i)),
         int_cell(static_cast<std::int64_t>(u.task_type + 1)),
         format_number(u.distance_m),
         format_number(u.params.profile.local_speed() / 1e9),
         format_number(u.params.weights.time_weight()),
         format_number(u.params.weights.energy_weight()),
         opt(d.raw_equilibrium), opt(d.raw_deadline),
         d.min_rb ? int_cell(*d.min_rb) : "",
         d.local_reason ? std::string(to_string(*d.local_reason)) : "",
         int_cell(run.sfa.assignment[i]), format_number(run.local[i].weighted),
         format_number(run.final[i].weighted), format_number(run.local[i].time_s),
         format_number(run.final[i].time_s), format_number(run.local[i].energy_j),
         format_number(run.final[i].energy_j)});
  }
  written.push_back(write_text(dir, "users.csv", users.to_string()));

  const auto states = offload_states(run);

  CsvTable fig2;
  fig2.header = {"slot", "offloaders"};
  for (std::size_t t = 0; t < types; ++t) {
    fig2.header.push_back("offloaders_type" + std::to_string(t + 1));
  }
  fig2.header.push_back("remaining_rb");
  CsvTable fig4;
  fig4.header = {"slot", "user", "overhead"};
  CsvTable fig5;
  fig5.header = {"slot", "total_overhead", "time_sum", "energy_sum"};
  for (std::size_t s = 0; s < states.size(); ++s) {
    std::vector<std::int64_t> per_type(types, 0);
    std::int64_t count = 0;
    double total = 0.0, time = 0.0, energy = 0.0;
    for (std::size_t i = 0; i < run.users.size(); ++i) {
      const auto& o = states[s][i] ? run.final[i] : run.local[i];
      if (states[s][i]) {
        ++count;
        ++per_type[run.users[i].task_type];
      }
      total += o.weighted;
      time += o.time_s;
      energy += o.energy_j;
      fig4.rows.push_back({int_cell(static_cast<std::int64_t>(s)),
                           int_cell(static_cast<std::int64_t>(i)),
                           format_number(o.weighted)});
    }
    std::vector<std::string> row = {int_cell(static_cast<std::int64_t>(s)),
                                    int_cell(count)};
    for (auto c : per_type) row.push_back(int_cell(c));
    row.push_back(int_cell(s == 0 ? run.sfa.capacity
                                  : run.sfa.trace[s - 1].remaining_rb_after));
    fig2.rows.push_back(std::move(row));
    fig5.rows.push_back({int_cell(static_cast<std::int64_t>(s)), format_number(total),
                         format_number(time), format_number(energy)});
  }
  written.push_back(write_text(dir, "fig2_offloaders.csv", fig2.to_string()));
  written.push_back(write_text(dir, "fig4_per_user_overhead.csv", fig4.to_string()));
  written.push_back(write_text(dir, "fig5_system_overhead.csv", fig5.to_string()));

  ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["kind"] = "run";
  doc["seed"] = run.seed;
  doc["config"] = config_json(run.config);
  ordered_json metrics;
  for (const auto& [name, value] : harness::metric_fields(run.metrics)) {
    metrics[name] = metric_json(value);
  }
  doc["metrics"] = metrics;
  written.push_back(write_text(dir, "metrics.json", dump(doc)));
  return written;
}

std::vector<fs::path> write_campaign_outputs(
    const fs::path& dir, const std::vector<harness::CampaignReport>& reports) {
  if (reports.empty()) throw std::invalid_argument("no campaign reports to write");
  std::vector<fs::path> written;

  CsvTable trials;
  trials.header = {"bandwidth_mhz", "rb_capacity", "trial", "seed"};
  for (const auto& [name, v] : harness::metric_fields(reports.front().trials.front().metrics)) {
    trials.header.push_back(name);
  }
  CsvTable fig6;
  fig6.header = {"bandwidth_mhz",         "rb_capacity",
                 "trials",                "mean_offloaders",
                 "std_offloaders",        "mean_reduction_total",
                 "mean_reduction_time",   "mean_reduction_energy"};

  ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["kind"] = "campaign";
  doc["base_seed"] = reports.front().base_seed;
  doc["settings"] = ordered_json::array();

  for (const auto& r : reports) {
    const std::string bw =
        r.config.bandwidth_mhz ? int_cell(*r.config.bandwidth_mhz) : "";
    for (const auto& tr : r.trials) {
      std::vector<std::string> row = {bw, int_cell(r.config.rb_capacity),
                                      int_cell(static_cast<std::int64_t>(tr.trial)),
                                      uint_cell(tr.seed)};
      for (const auto& [name, v] : harness::metric_fields(tr.metrics)) {
        row.push_back(metric_cell(v));
      }
      if (row.size() != trials.header.size()) {
        throw std::invalid_argument("campaign settings have different task catalogs");
      }
      trials.rows.push_back(std::move(row));
    }
    fig6.rows.push_back({bw, int_cell(r.config.rb_capacity),
                         int_cell(static_cast<std::int64_t>(r.trials.size())),
                         format_number(r.field("offloader_count").mean),
                         format_number(r.field("offloader_count").stddev),
                         format_number(r.field("reduction_total").mean),
                         format_number(r.field("reduction_time").mean),
                         format_number(r.field("reduction_energy").mean)});

    ordered_json setting;
    setting["bandwidth_mhz"] =
        r.config.bandwidth_mhz ? ordered_json(*r.config.bandwidth_mhz) : ordered_json();
    setting["rb_capacity"] = r.config.rb_capacity;
    setting["trials"] = r.trials.size();
    setting["config"] = config_json(r.config);
    ordered_json fields;
    for (const auto& f : r.summary) {
      fields[f.name] = {{"mean", round6(f.mean)}, {"std", round6(f.stddev)}};
    }
    setting["fields"] = fields;
    // Reductions of the mean sums; reproducible from the "fields" means above.
    const auto pooled = [&r](const char* base, const char* fin) {
      return round6(harness::reduction_percent(r.field(base).mean, r.field(fin).mean));
    };
    setting["pooled_reduction"] = {
        {"total", pooled("total_overhead_local_baseline", "total_overhead_final")},
        {"time", pooled("time_sum_baseline", "time_sum_final")},
        {"energy", pooled("energy_sum_baseline", "energy_sum_final")}};
    doc["settings"].push_back(setting);
  }

  written.push_back(write_text(dir, "campaign_trials.csv", trials.to_string()));
  written.push_back(write_text(dir, "fig6_summary.csv", fig6.to_string()));
  written.push_back(write_text(dir, "campaign_summary.json", dump(doc)));
  return written;
}

std::vector<fs::path> write_compare_outputs(const fs::path& dir,
                                            const harness::CompareReport& report) {
  std::vector<fs::path> written;
  CsvTable trials;
  trials.header = {"trial",        "seed",           "sfa_count",
                   "oracle_count", "count_gap",      "sfa_overhead",
                   "oracle_overhead", "overhead_gap"};
  std::int64_t max_count_gap = 0, with_count_gap = 0, lex_violations = 0;
  double gap_sum = 0.0, overhead_gap_sum = 0.0;
  double min_overhead_gap = 0.0, max_overhead_gap = 0.0;
  for (std::size_t k = 0; k < report.trials.size(); ++k) {
    const auto& t = report.trials[k];
    trials.rows.push_back({int_cell(static_cast<std::int64_t>(t.trial)), uint_cell(t.seed),
                           int_cell(t.sfa_count), int_cell(t.oracle_count),
                           int_cell(t.gap.count_gap), format_number(t.sfa_overhead),
                           format_number(t.oracle_overhead),
                           format_number(t.gap.overhead_gap)});
    max_count_gap = std::max(max_count_gap, t.gap.count_gap);
    if (t.gap.count_gap > 0) ++with_count_gap;
    gap_sum += static_cast<double>(t.gap.count_gap);
    overhead_gap_sum += t.gap.overhead_gap;
    min_overhead_gap = k ? std::min(min_overhead_gap, t.gap.overhead_gap) : t.gap.overhead_gap;
    max_overhead_gap = k ? std::max(max_overhead_gap, t.gap.overhead_gap) : t.gap.overhead_gap;
    if (t.gap.count_gap < 0 || (t.gap.count_gap == 0 && t.gap.overhead_gap < -1e-9)) {
      ++lex_violations;
    }
  }
  const double n = static_cast<double>(report.trials.size());

  ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["kind"] = "compare";
  doc["base_seed"] = report.base_seed;
  doc["trials"] = report.trials.size();
  doc["oracle_bound"] = report.eligible_bound;
  doc["config"] = config_json(report.config);
  doc["count_gap"] = {{"mean", round6(gap_sum / n)},
                      {"max", max_count_gap},
                      {"trials_with_gap", with_count_gap}};
  doc["overhead_gap"] = {{"mean", round6(overhead_gap_sum / n)},
                         {"min", round6(min_overhead_gap)},
                         {"max", round6(max_overhead_gap)}};
  doc["lexicographic_dominance_violations"] = lex_violations;

  written.push_back(write_text(dir, "compare_trials.csv", trials.to_string()));
  written.push_back(write_text(dir, "compare_summary.json", dump(doc)));
  return written;
}

}  // namespace vecc::report
