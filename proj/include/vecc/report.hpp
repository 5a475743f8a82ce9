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

#ifndef VECC_REPORT_HPP_
#define VECC_REPORT_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "vecc/harness.hpp"

// CSV / JSON emission. Real numbers are written with 6 significant digits
// and every file has a fixed column / key order, so re-parsing an emitted
// file and writing it again reproduces it byte for byte.
namespace vecc::report {

inline constexpr int kSchemaVersion = 1;

/// printf("%.6g").
std::string format_number(double v);
/// v rounded to the value format_number would print.
double round6(double v);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string to_string() const;
  /// Throws std::runtime_error on a ragged or empty table.
  static CsvTable parse(std::string_view text);
};

/// Parses CSV text and re-serialises it with canonical number formatting.
std::string canonical_csv(std::string_view text);
/// Parses JSON text and re-serialises it the way the writers do.
std::string canonical_json(std::string_view text);

/// trace.csv, users.csv, fig2_offloaders.csv, fig4_per_user_overhead.csv,
/// fig5_system_overhead.csv and metrics.json.
std::vector<std::filesystem::path> write_run_outputs(
    const std::filesystem::path& dir, const harness::SingleRun& run);

/// campaign_trials.csv, fig6_summary.csv and campaign_summary.json covering
/// every bandwidth setting in `reports`.
std::vector<std::filesystem::path> write_campaign_outputs(
    const std::filesystem::path& dir,
    const std::vector<harness::CampaignReport>& reports);

/// compare_trials.csv and compare_summary.json.
std::vector<std::filesystem::path> write_compare_outputs(
    const std::filesystem::path& dir, const harness::CompareReport& report);

}  // namespace vecc::report

#endif  // VECC_REPORT_HPP_
