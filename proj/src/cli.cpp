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

#include "qsweep/cli.hpp"

#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qsweep/error.hpp"
#include "qsweep/format.hpp"
#include "qsweep/range.hpp"
#include "qsweep/report.hpp"
#include "qsweep/result_io.hpp"
#include "qsweep/sweep.hpp"
#include "qsweep/version.hpp"

namespace qsweep::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

struct ReportFlags {
  std::string report;
  std::string title = "Threshold Sweep Report";
  std::string format = "full";
  std::string chart = "term";
  std::string symbols = "unicode";
  std::string timestamp;
};

struct SweepFlags {
  std::string input;
  std::string id_col;
  std::string outcome;
  std::string conditions;
  double incl_cut = 0.8;
  std::size_t n_cut = 1;
  std::string include = "none";
  std::string dir_exp;
  bool details = false;
  std::string out;
  unsigned threads = 1;
  ReportFlags report;

  // Sweep-specific
  std::string sweep_range;
  std::string thrx;
  std::string sweep_var;
  double thry = 0;
  double thrx_default = 0;
  std::string sweep_list;
  std::string sweep_list_x;
  std::string sweep_range_y;
};

void add_report_flags(CLI::App* app, ReportFlags& f, bool required) {
  auto* opt = app->add_option("--report", f.report, "Write a Markdown report to PATH");
  if (required) opt->required();
  app->add_option("--title", f.title, "Report title")->capture_default_str();
  app->add_option("--format", f.format, "Report format")
      ->check(CLI::IsMember({"full", "summary"}))
      ->capture_default_str();
  app->add_option("--chart", f.chart, "Configuration chart level")
      ->check(CLI::IsMember({"term", "threshold", "none"}))
      ->capture_default_str();
  app->add_option("--symbols", f.symbols, "Chart symbol set")
      ->check(CLI::IsMember({"unicode", "ascii", "latex"}))
      ->capture_default_str();
  app->add_option("--timestamp", f.timestamp,
                  "Text for the report's Generated line (default: SOURCE_DATE_EPOCH or now)");
}

void add_shared_flags(CLI::App* app, SweepFlags& f) {
  app->add_option("--input", f.input, "CSV file with raw condition and outcome values")
      ->required();
  app->add_option("--id-col", f.id_col, "Column holding case identifiers");
  app->add_option("--outcome", f.outcome, "Outcome column; prefix with ~ to negate")->required();
  app->add_option("--conditions", f.conditions, "Comma-separated condition columns")->required();
  app->add_option("--incl-cut", f.incl_cut, "Consistency cutoff")->capture_default_str();
  app->add_option("--n-cut", f.n_cut, "Frequency cutoff")->capture_default_str();
  app->add_option("--include", f.include, "Remainder treatment")
      ->check(CLI::IsMember({"none", "remainders"}))
      ->capture_default_str();
  app->add_option("--dir-exp", f.dir_exp,
                  "Directional expectations, one of 1,0,- per condition (e.g. 1,1,-)");
  app->add_flag("--details", f.details, "Keep per-point details in the result");
  app->add_option("--out", f.out, "Write the result as JSON to PATH");
  app->add_option("--threads", f.threads, "Worker threads for grid points (0 = all cores)")
      ->capture_default_str();
  add_report_flags(app, f.report, false);
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(',', start);
    std::string item(trim(std::string_view(text).substr(
        start, pos == std::string::npos ? std::string::npos : pos - start)));
    if (item.empty()) throw UsageError("empty entry in list '" + text + "'");
    out.push_back(std::move(item));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<Expectation> parse_dir_exp(const std::string& text) {
  std::vector<Expectation> out;
  for (const auto& item : split_list(text)) {
    if (item == "1") out.push_back(Expectation::kPresent);
    else if (item == "0") out.push_back(Expectation::kAbsent);
    else if (item == "-") out.push_back(Expectation::kNone);
    else throw UsageError("directional expectation '" + item + "' must be 1, 0 or -");
  }
  return out;
}

template <typename F>
auto usage_guard(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const DataError& e) {
    throw UsageError(e.what());
  }
}

ReportOptions report_options(const ReportFlags& f) {
  ReportOptions o;
  o.title = f.title;
  o.format = parse_report_format(f.format);
  o.include_chart = f.chart != "none";
  if (o.include_chart) o.chart_level = parse_chart_level(f.chart);
  o.chart_format = parse_chart_format(f.symbols);
  if (!f.timestamp.empty()) o.timestamp = f.timestamp;
  return o;
}

void run_sweep(SweepKind kind, const SweepFlags& f, std::ostream& out) {
  const auto conditions = split_list(f.conditions);
  SweepOptions options;
  options.incl_cut = f.incl_cut;
  options.n_cut = f.n_cut;
  options.include_remainders = f.include == "remainders";
  options.return_details = f.details;
  options.threads = f.threads;
  if (!f.dir_exp.empty()) {
    if (!options.include_remainders) {
      throw UsageError("directional expectations require remainder inclusion");
    }
    auto exp = parse_dir_exp(f.dir_exp);
    if (exp.size() != conditions.size()) {
      throw UsageError("--dir-exp has " + std::to_string(exp.size()) + " entries for " +
                       std::to_string(conditions.size()) + " conditions");
    }
    options.dir_exp = std::move(exp);
  }
  const auto outcome = usage_guard([&] { return OutcomeSpec::parse(f.outcome); });
  auto report_opts = report_options(f.report);

  const std::optional<std::string> id_col =
      f.id_col.empty() ? std::nullopt : std::optional<std::string>(f.id_col);
  const RawDataset raw = load_csv(f.input, id_col);

  SweepResult result;
  switch (kind) {
    case SweepKind::kOutcome: {
      auto range = usage_guard([&] { return parse_range(f.sweep_range); });
      auto thr_x = usage_guard([&] { return parse_assignment(f.thrx); });
      result = ot_sweep(raw, outcome, conditions, range, thr_x, options);
      break;
    }
    case SweepKind::kSingleCondition: {
      auto range = usage_guard([&] { return parse_range(f.sweep_range); });
      result = ct_sweep_s(raw, outcome, conditions, f.thry, f.sweep_var, range, f.thrx_default,
                          options);
      break;
    }
    case SweepKind::kMultiCondition: {
      auto axes = usage_guard([&] { return parse_axes(f.sweep_list); });
      result = ct_sweep_m(raw, outcome, conditions, f.thry, axes, options);
      break;
    }
    case SweepKind::kDual: {
      auto axes = usage_guard([&] { return parse_axes(f.sweep_list_x); });
      auto range = usage_guard([&] { return parse_range(f.sweep_range_y); });
      result = dt_sweep(raw, outcome, conditions, axes, range, options);
      break;
    }
  }

  out << print_summary(result);
  if (!f.out.empty()) export_result(result, f.out);
  if (!f.report.report.empty()) {
    report_opts.input_hint = f.input;
    report_opts.id_column = id_col;
    generate_report(result, f.report.report, report_opts, &out);
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Crisp-set QCA with threshold sweeps", "qsweep"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  SweepFlags ot, cts, ctm, dt;
  auto* ot_cmd = app.add_subcommand("otsweep", "Sweep the outcome threshold");
  add_shared_flags(ot_cmd, ot);
  ot_cmd->add_option("--sweep-range", ot.sweep_range, "Outcome thresholds, LO:HI[:STEP]")
      ->required();
  ot_cmd->add_option("--thrx", ot.thrx, "Condition thresholds, e.g. A=2,B=2")->required();

  auto* cts_cmd = app.add_subcommand("ctsweeps", "Sweep one condition threshold");
  add_shared_flags(cts_cmd, cts);
  cts_cmd->add_option("--sweep-var", cts.sweep_var, "Condition to sweep")->required();
  cts_cmd->add_option("--sweep-range", cts.sweep_range, "Thresholds, LO:HI[:STEP]")->required();
  cts_cmd->add_option("--thry", cts.thry, "Outcome threshold")->required();
  cts_cmd->add_option("--thrx-default", cts.thrx_default,
                      "Threshold for the conditions not swept")
      ->required();

  auto* ctm_cmd = app.add_subcommand("ctsweepm", "Sweep a grid of condition thresholds");
  add_shared_flags(ctm_cmd, ctm);
  ctm_cmd->add_option("--sweep-list", ctm.sweep_list,
                      "One axis per condition, e.g. A=2:3,B=2:3")
      ->required();
  ctm_cmd->add_option("--thry", ctm.thry, "Outcome threshold")->required();

  auto* dt_cmd = app.add_subcommand("dtsweep", "Sweep condition grid and outcome thresholds");
  add_shared_flags(dt_cmd, dt);
  dt_cmd->add_option("--sweep-list-x", dt.sweep_list_x,
                     "One axis per condition, e.g. A=2:3,B=2:3")
      ->required();
  dt_cmd->add_option("--sweep-range-y", dt.sweep_range_y, "Outcome thresholds, LO:HI[:STEP]")
      ->required();

  std::string result_path;
  ReportFlags rep;
  auto* rep_cmd = app.add_subcommand("report", "Write a report from a saved result file");
  rep_cmd->add_option("--input", result_path, "Result JSON written with --out")->required();
  add_report_flags(rep_cmd, rep, true);
  std::string dataset_hint, dataset_id_col;
  rep_cmd->add_option("--dataset", dataset_hint, "CSV path to show in the re-run command");
  rep_cmd->add_option("--id-col", dataset_id_col, "Id column to show in the re-run command");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help("", CLI::AppFormatMode::All) : subs.front()->help());
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    err << "Run 'qsweep --help' for usage.\n";
    return kExitUsage;
  }

  try {
    if (ot_cmd->parsed()) run_sweep(SweepKind::kOutcome, ot, out);
    else if (cts_cmd->parsed()) run_sweep(SweepKind::kSingleCondition, cts, out);
    else if (ctm_cmd->parsed()) run_sweep(SweepKind::kMultiCondition, ctm, out);
    else if (dt_cmd->parsed()) run_sweep(SweepKind::kDual, dt, out);
    else if (rep_cmd->parsed()) {
      auto opts = report_options(rep);
      if (!dataset_hint.empty()) opts.input_hint = dataset_hint;
      if (!dataset_id_col.empty()) opts.id_column = dataset_id_col;
      auto result = import_result(result_path);
      generate_report(result, rep.report, opts, &out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const DataError& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitOk;
}

}  // namespace qsweep::cli
