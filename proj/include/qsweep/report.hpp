// Copyright 2026 The qsweep Authors
//
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

// Plain-text summary tables and Markdown reports.

#ifndef QSWEEP_REPORT_HPP_
#define QSWEEP_REPORT_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qsweep/chart.hpp"
#include "qsweep/sweep.hpp"

namespace qsweep {

// Columns right-justified to the widest cell, each preceded by one space.
// min_widths (optional, per column) widens columns further.
std::string format_table(const std::vector<std::string>& headers,
                         const std::vector<std::vector<std::string>>& rows,
                         const std::vector<std::size_t>& min_widths = {});

// Summary rows with the columns of the sweep kind, e.g.
// " thrY  expression inclS  covS n_solutions".
std::string summary_table(const SweepResult& result);

// Title, analysis parameters and the summary table, as printed by the CLI.
std::string print_summary(const SweepResult& result);

enum class ReportFormat { kFull, kSummary };

// "full" or "summary"; throws DataError otherwise.
ReportFormat parse_report_format(std::string_view name);

struct ReportOptions {
  std::string title = "Threshold Sweep Report";
  ReportFormat format = ReportFormat::kFull;
  bool include_chart = true;
  ChartLevel chart_level = ChartLevel::kTerm;
  ChartFormat chart_format = ChartFormat::kUnicode;
  // Printed on the "Generated:" line. When unset, SOURCE_DATE_EPOCH or the
  // current UTC time is used.
  std::optional<std::string> timestamp;
  // Shown as --input in the re-run command.
  std::string input_hint = "<data.csv>";
  std::optional<std::string> id_column;
};

// "2026-01-01T00:00:00Z"
std::string utc_timestamp(std::int64_t seconds_since_epoch);
std::string default_timestamp();

std::string render_report(const SweepResult& result, const ReportOptions& options);

// Renders, writes `path` (IoError on failure) and prints
// "Report generated: <path>" to `log` when given.
std::string generate_report(const SweepResult& result, const std::filesystem::path& path,
                            const ReportOptions& options, std::ostream* log = nullptr);

// CLI command that repeats the sweep, or nullopt when a swept axis is not a
// LO:HI:STEP progression.
std::optional<std::string> rerun_command(const SweepSettings& settings,
                                         const std::string& input_hint,
                                         const std::optional<std::string>& id_column);

}  // namespace qsweep

#endif  // QSWEEP_REPORT_HPP_
