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

#include "qsweep/report.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>

#include "qsweep/error.hpp"
#include "qsweep/expression.hpp"
#include "qsweep/format.hpp"
#include "qsweep/range.hpp"

namespace qsweep {

namespace {

constexpr std::size_t kFullTruthTableConditions = 6;

std::string pad_left(const std::string& text, std::size_t width) {
  std::size_t w = display_width(text);
  return w >= width ? text : std::string(width - w, ' ') + text;
}

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

std::string join_numbers(const std::vector<double>& values) {
  std::vector<std::string> parts;
  for (double v : values) parts.push_back(format_number(v));
  return join(parts, ", ");
}

std::string expectations_text(const std::vector<Expectation>& e) {
  std::vector<std::string> parts;
  for (auto x : e) parts.emplace_back(1, expectation_code(x));
  return join(parts, ",");
}

std::string shell_quote(const std::string& arg) {
  bool plain = !arg.empty() && std::all_of(arg.begin(), arg.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || std::string_view("_.,=:/+-").find(c) !=
                                                              std::string_view::npos;
  });
  if (plain) return arg;
  std::string out = "'";
  for (char c : arg) {
    if (c == '\'') out += "'\\''";
    else out += c;
  }
  return out + "'";
}

const char* kind_title(SweepKind kind) {
  switch (kind) {
    case SweepKind::kOutcome: return "Outcome Threshold Sweep";
    case SweepKind::kSingleCondition: return "Single-Condition Threshold Sweep";
    case SweepKind::kMultiCondition: return "Multi-Condition Threshold Sweep";
    case SweepKind::kDual: return "Dual Threshold Sweep";
  }
  throw InternalError("bad sweep kind");
}

// Coordinate headers and cells for one summary row.
std::vector<std::string> coord_headers(SweepKind kind) {
  switch (kind) {
    case SweepKind::kOutcome: return {"thrY"};
    case SweepKind::kSingleCondition: return {"threshold"};
    case SweepKind::kMultiCondition: return {"threshold", "combo_id"};
    case SweepKind::kDual: return {"thrY", "combo_id", "thrX"};
  }
  throw InternalError("bad sweep kind");
}

std::vector<std::string> coord_cells(SweepKind kind, const Coordinates& c) {
  auto num = [](const std::optional<double>& v) { return v ? format_number(*v) : "NA"; };
  auto combo = [&] { return c.combo_id ? std::to_string(*c.combo_id) : "NA"; };
  switch (kind) {
    case SweepKind::kOutcome: return {num(c.thr_y)};
    case SweepKind::kSingleCondition: return {num(c.threshold)};
    case SweepKind::kMultiCondition: return {c.thr_x_label.value_or(""), combo()};
    case SweepKind::kDual: return {num(c.thr_y), combo(), c.thr_x_label.value_or("")};
  }
  throw InternalError("bad sweep kind");
}

std::string parameters_block(const SweepSettings& s) {
  std::string out;
  out += "Outcome: " + s.outcome.label() + "\n";
  out += "Conditions: " + join(s.conditions, ", ") + "\n";
  out += "Consistency cutoff: " + format_number(s.incl_cut) + "\n";
  out += "Frequency cutoff: " + std::to_string(s.n_cut) + "\n";
  return out;
}

std::string format_range_text(const std::optional<std::pair<double, double>>& r) {
  if (!r) return "NA";
  return format_fit(r->first) + " to " + format_fit(r->second);
}

std::string truth_table_block(const TruthTable& tt) {
  std::vector<std::string> headers = tt.conditions;
  for (const char* h : {"OUT", "n", "incl", "cases"}) headers.emplace_back(h);
  std::vector<std::vector<std::string>> rows;
  // Wide tables list observed configurations only.
  const bool all_rows = tt.condition_count() <= kFullTruthTableConditions;
  std::size_t hidden = 0;
  for (const auto& r : tt.rows) {
    if (r.n == 0 && !all_rows) {
      ++hidden;
      continue;
    }
    std::vector<std::string> cells;
    std::string bits = tt.config_bits(r.config);
    for (char b : bits) cells.emplace_back(1, b);
    cells.emplace_back(1, outcome_code(r.out));
    cells.push_back(std::to_string(r.n));
    cells.push_back(r.incl ? format_fit(r.incl) : "-");
    cells.push_back(join(r.cases, ","));
    rows.push_back(std::move(cells));
  }
  std::string out = format_table(headers, rows);
  if (hidden) out += "\n" + std::to_string(hidden) + " unobserved configurations not shown\n";
  return out;
}

std::string terms_text(const std::vector<Implicant>& terms,
                       const std::vector<std::string>& conditions) {
  if (terms.empty()) return "none";
  std::vector<std::string> parts;
  for (const auto& t : terms) parts.push_back(render_term(t, conditions));
  return join(parts, ", ");
}

std::string point_section(const SweepResult& result, const PointDetail& p) {
  const auto& conditions = p.truth_table.conditions;
  SummaryRow row = summarize(p);
  std::string out = "### " + coordinate_label(result, row) + "\n\n";
  out += "Condition thresholds: " + p.condition_thresholds.label() + "; outcome threshold: " +
         format_number(p.outcome_threshold) + "\n\n";
  out += "Truth table:\n\n```\n" + truth_table_block(p.truth_table) + "```\n\n";

  const auto& sol = p.solution;
  out += std::string("Solution (") + solution_type_name(sol.type) + "): ";
  if (!sol.has_solution()) {
    out += "No solution\n\n";
  } else {
    out += std::to_string(sol.models.size()) +
           (sol.models.size() == 1 ? " model\n\n" : " models\n\n");
    for (std::size_t m = 0; m < sol.models.size(); ++m) {
      out += "- M" + std::to_string(m + 1) + ": " + render_expression(sol.models[m], conditions) +
             "\n";
    }
    out += "\nEPI: " + terms_text(sol.epi, conditions) + "\n";
    out += "SPI: " + terms_text(sol.spi, conditions) + "\n\n";
    if (sol.type == SolutionType::kIntermediate &&
        (sol.conservative_models.size() > 1 || sol.parsimonious_models.size() > 1)) {
      out += "Note: the intermediate solution was derived from the first of " +
             std::to_string(sol.conservative_models.size()) + " conservative and the first of " +
             std::to_string(sol.parsimonious_models.size()) + " parsimonious models.\n\n";
    }
    for (std::size_t m = 0; m < sol.models.size(); ++m) {
      const auto& fit = p.fits.at(m);
      std::vector<std::vector<std::string>> rows;
      const auto& terms = sol.models[m].terms;
      for (std::size_t t = 0; t < terms.size(); ++t) {
        const auto& tf = fit.per_term.at(t);
        rows.push_back({render_term(terms[t], conditions), format_fit(tf.incl), format_fit(tf.cov),
                        format_fit(tf.cov_unique)});
      }
      rows.push_back({"M" + std::to_string(m + 1), format_fit(fit.incl_s), format_fit(fit.cov_s),
                      ""});
      out += "Fit (M" + std::to_string(m + 1) + "):\n\n```\n" +
             format_table({"term", "incl", "cov", "covU"}, rows) + "```\n\n";
    }
  }

  std::vector<std::vector<std::string>> nec;
  for (const auto& n : p.necessity) {
    nec.push_back({n.condition, format_fit(n.incl_n), format_fit(n.cov_n)});
  }
  out += "Necessity:\n\n```\n" + format_table({"condition", "inclN", "covN"}, nec) + "```\n\n";
  return out;
}

}  // namespace

std::string format_table(const std::vector<std::string>& headers,
                         const std::vector<std::vector<std::string>>& rows,
                         const std::vector<std::size_t>& min_widths) {
  std::vector<std::size_t> widths(headers.size(), 0);
  for (std::size_t c = 0; c < headers.size(); ++c) {
    widths[c] = display_width(headers[c]);
    if (c < min_widths.size()) widths[c] = std::max(widths[c], min_widths[c]);
  }
  for (const auto& row : rows) {
    if (row.size() != headers.size()) throw InternalError("table row has the wrong width");
    for (std::size_t c = 0; c < row.size(); ++c) {
      widths[c] = std::max(widths[c], display_width(row[c]));
    }
  }
  std::string out;
  auto emit = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) out += " " + pad_left(cells[c], widths[c]);
    out += "\n";
  };
  emit(headers);
  for (const auto& row : rows) emit(row);
  return out;
}

std::string summary_table(const SweepResult& result) {
  const SweepKind kind = result.settings.kind;
  std::vector<std::string> headers = coord_headers(kind);
  std::vector<std::size_t> min_widths(headers.size(), 0);
  headers.insert(headers.end(), {"expression", "inclS", "covS", "n_solutions"});
  min_widths.push_back(kNoSolution.size());
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : result.summary) {
    auto cells = coord_cells(kind, r.coords);
    cells.push_back(r.expression);
    cells.push_back(format_fit(r.incl_s));
    cells.push_back(format_fit(r.cov_s));
    cells.push_back(std::to_string(r.n_solutions));
    rows.push_back(std::move(cells));
  }
  return format_table(headers, rows, min_widths);
}

std::string print_summary(const SweepResult& result) {
  std::string title = std::string(kind_title(result.settings.kind)) + " Summary";
  std::string out = title + "\n" + std::string(title.size(), '=') + "\n\n";
  out += "Analysis Parameters:\n";
  std::string params = parameters_block(result.settings);
  std::size_t start = 0;
  while (start < params.size()) {
    auto end = params.find('\n', start);
    out += "  " + params.substr(start, end - start) + "\n";
    start = end + 1;
  }
  out += "\nResults by Threshold:\n\n" + summary_table(result);
  return out;
}

ReportFormat parse_report_format(std::string_view name) {
  if (name == "full") return ReportFormat::kFull;
  if (name == "summary") return ReportFormat::kSummary;
  throw DataError("unknown report format '" + std::string(name) + "'");
}

std::string utc_timestamp(std::int64_t seconds) {
  std::time_t t = static_cast<std::time_t>(seconds);
  std::tm tm{};
  if (!gmtime_r(&t, &tm)) throw DataError("timestamp out of range");
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string default_timestamp() {
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) {
    auto v = parse_number(epoch);
    if (v && *v >= 0 && *v == static_cast<double>(static_cast<std::int64_t>(*v))) {
      return utc_timestamp(static_cast<std::int64_t>(*v));
    }
  }
  return utc_timestamp(static_cast<std::int64_t>(std::time(nullptr)));
}

std::optional<std::string> rerun_command(const SweepSettings& s, const std::string& input_hint,
                                         const std::optional<std::string>& id_column) {
  std::vector<std::string> args = {"qsweep", sweep_kind_name(s.kind), "--input", input_hint};
  if (id_column) args.insert(args.end(), {"--id-col", *id_column});
  args.insert(args.end(), {"--outcome", s.outcome.label(), "--conditions", join(s.conditions, ",")});
  switch (s.kind) {
    case SweepKind::kOutcome: {
      auto range = format_range(s.sweep_range);
      if (!range) return std::nullopt;
      args.insert(args.end(), {"--sweep-range", *range, "--thrx", format_assignment(s.thr_x)});
      break;
    }
    case SweepKind::kSingleCondition: {
      auto range = format_range(s.sweep_range);
      if (!range || !s.sweep_var || !s.thr_y || !s.thr_x_default) return std::nullopt;
      args.insert(args.end(), {"--sweep-var", *s.sweep_var, "--sweep-range", *range, "--thry",
                               format_number(*s.thr_y), "--thrx-default",
                               format_number(*s.thr_x_default)});
      break;
    }
    case SweepKind::kMultiCondition: {
      auto axes = format_axes(s.sweep_list);
      if (!axes || !s.thr_y) return std::nullopt;
      args.insert(args.end(), {"--sweep-list", *axes, "--thry", format_number(*s.thr_y)});
      break;
    }
    case SweepKind::kDual: {
      auto axes = format_axes(s.sweep_list);
      auto range = format_range(s.sweep_range);
      if (!axes || !range) return std::nullopt;
      args.insert(args.end(), {"--sweep-list-x", *axes, "--sweep-range-y", *range});
      break;
    }
  }
  args.insert(args.end(), {"--incl-cut", format_number(s.incl_cut), "--n-cut",
                           std::to_string(s.n_cut), "--include",
                           s.include_remainders ? "remainders" : "none"});
  if (s.dir_exp) args.insert(args.end(), {"--dir-exp", expectations_text(*s.dir_exp)});
  if (s.return_details) args.push_back("--details");
  std::vector<std::string> quoted;
  for (const auto& a : args) quoted.push_back(shell_quote(a));
  return join(quoted, " ");
}

std::string render_report(const SweepResult& result, const ReportOptions& options) {
  const auto& s = result.settings;
  std::string out = "# " + options.title + "\n\n";
  out += "Generated: " + options.timestamp.value_or(default_timestamp()) + "\n\n";

  out += "## Reproducibility\n\n";
  out += std::string("- Sweep: ") + sweep_kind_name(s.kind) + "\n";
  out += "- Outcome: " + s.outcome.label() + "\n";
  out += "- Conditions: " + join(s.conditions, ", ") + "\n";
  switch (s.kind) {
    case SweepKind::kOutcome:
      out += "- Outcome thresholds: " + join_numbers(s.sweep_range) + "\n";
      out += "- Condition thresholds: " + s.thr_x.label() + "\n";
      break;
    case SweepKind::kSingleCondition:
      out += "- Outcome threshold: " + (s.thr_y ? format_number(*s.thr_y) : "NA") + "\n";
      out += "- Swept condition: " + s.sweep_var.value_or("NA") + "\n";
      out += "- Swept thresholds: " + join_numbers(s.sweep_range) + "\n";
      out += "- Other conditions fixed at: " +
             (s.thr_x_default ? format_number(*s.thr_x_default) : "NA") + "\n";
      break;
    case SweepKind::kMultiCondition:
    case SweepKind::kDual:
      if (s.kind == SweepKind::kMultiCondition) {
        out += "- Outcome threshold: " + (s.thr_y ? format_number(*s.thr_y) : "NA") + "\n";
      } else {
        out += "- Outcome thresholds: " + join_numbers(s.sweep_range) + "\n";
      }
      for (const auto& axis : s.sweep_list) {
        out += "- Thresholds for " + axis.name + ": " + join_numbers(axis.thresholds) + "\n";
      }
      break;
  }
  out += std::string("- Remainders: ") + (s.include_remainders ? "included" : "excluded") + "\n";
  out += "- Directional expectations: " + (s.dir_exp ? expectations_text(*s.dir_exp) : "none") +
         "\n";
  out += std::string("- Details kept: ") + (s.return_details ? "yes" : "no") + "\n";
  out += "- Cases: " + std::to_string(s.n_cases) + "\n";
  out += "- Dataset SHA-256: " + (s.dataset_digest.empty() ? "unknown" : s.dataset_digest) + "\n";
  out += "- qsweep version: " + s.version + "\n\n";
  out += "Analysis parameters:\n\n```\n" + parameters_block(s) + "```\n\n";
  if (auto cmd = rerun_command(s, options.input_hint, options.id_column)) {
    out += "Re-run:\n\n```\n" + *cmd + "\n```\n\n";
  } else {
    out += "The swept values are not an evenly spaced range, so no command line is given; "
           "re-run through the library with the settings above.\n\n";
  }

  out += "## Summary\n\n```\n" + summary_table(result) + "```\n\n";

  const auto& st = result.stats;
  out += "## Sweep statistics\n\n";
  out += "- Points: " + std::to_string(st.n_thresholds) + "\n";
  out += "- Unique solutions: " + std::to_string(st.unique_solutions) + "\n";
  out += "- Stability: " + format_fit(st.stability) + "\n";
  out += "- inclS range: " + format_range_text(st.incl_range) + "\n";
  out += "- covS range: " + format_range_text(st.cov_range) + "\n\n";

  out += "## Solution complexity\n\n```\n";
  {
    std::vector<std::string> headers = coord_headers(s.kind);
    headers.insert(headers.end(), {"terms", "literals_per_term"});
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : result.summary) {
      auto cells = coord_cells(s.kind, r.coords);
      auto c = expression_complexity(r.expression);
      char buf[32];
      if (c) std::snprintf(buf, sizeof buf, "%.2f", c->mean_literals);
      cells.push_back(c ? std::to_string(c->n_terms) : "0");
      cells.push_back(c ? std::string(buf) : "NA");
      rows.push_back(std::move(cells));
    }
    out += format_table(headers, rows);
  }
  out += "```\n\n";

  if (options.include_chart) {
    out += "## Configuration chart\n\n";
    bool any = std::any_of(result.summary.begin(), result.summary.end(),
                           [](const SummaryRow& r) { return r.n_solutions > 0; });
    if (!any) {
      out += "No point in this sweep has a solution, so there is nothing to chart.\n\n";
    } else {
      auto chart = config_chart(result, options.chart_level);
      out += std::string("```") + (options.chart_format == ChartFormat::kLatex ? "latex" : "") +
             "\n" + render_chart(chart, options.chart_format) + "```\n\n";
    }
  }

  if (options.format == ReportFormat::kFull) {
    out += "## Details\n\n";
    if (!result.details) {
      out += "Per-point details were not kept for this sweep (run it with --details).\n";
    } else {
      for (const auto& p : *result.details) out += point_section(result, p);
    }
  }
  while (out.size() >= 2 && out.ends_with("\n\n")) out.pop_back();
  return out;
}

std::string generate_report(const SweepResult& result, const std::filesystem::path& path,
                            const ReportOptions& options, std::ostream* log) {
  std::string text = render_report(result, options);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write report '" + path.string() + "'");
  out << text;
  if (!out.flush()) throw IoError("cannot write report '" + path.string() + "'");
  if (log) *log << "Report generated: " << path.string() << "\n";
  return text;
}

}  // namespace qsweep
