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

#include "qsweep/chart.hpp"

#include <algorithm>

#include "qsweep/error.hpp"
#include "qsweep/expression.hpp"
#include "qsweep/format.hpp"

namespace qsweep {

namespace {

std::string pad_right(const std::string& text, std::size_t width) {
  std::size_t w = display_width(text);
  return w >= width ? text : text + std::string(width - w, ' ');
}

std::string latex_escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': case '%': case '$': case '#': case '_': case '{': case '}':
        out += '\\';
        out += c;
        break;
      case '~': out += "\\textasciitilde{}"; break;
      case '^': out += "\\textasciicircum{}"; break;
      case '\\': out += "\\textbackslash{}"; break;
      default: out += c;
    }
  }
  return out;
}

Cell cell_for(Literal lit) {
  switch (lit) {
    case Literal::kPresent: return Cell::kPresent;
    case Literal::kAbsent: return Cell::kAbsent;
    case Literal::kFree: return Cell::kBlank;
  }
  return Cell::kBlank;
}

std::vector<Model> models_for(const SweepResult& result, std::size_t row_index, bool all) {
  const auto& row = result.summary[row_index];
  if (row.n_solutions == 0) return {};
  if (result.details && row_index < result.details->size()) {
    const auto& models = (*result.details)[row_index].solution.models;
    if (all) return models;
    return {models.front()};
  }
  return {parse_expression(row.expression, result.settings.conditions)};
}

}  // namespace

SymbolSet SymbolSet::unicode() { return {"\u25CF", "\u2297", "", "\u00B1"}; }
SymbolSet SymbolSet::ascii() { return {"*", "x", "", "~"}; }
SymbolSet SymbolSet::latex() { return {"$\\bullet$", "$\\otimes$", "", "$\\pm$"}; }

SymbolSet SymbolSet::for_format(ChartFormat format) {
  switch (format) {
    case ChartFormat::kUnicode: return unicode();
    case ChartFormat::kAscii: return ascii();
    case ChartFormat::kLatex: return latex();
  }
  throw InternalError("bad chart format");
}

const std::string& SymbolSet::glyph(Cell cell) const {
  switch (cell) {
    case Cell::kPresent: return present;
    case Cell::kAbsent: return absent;
    case Cell::kBlank: return blank;
    case Cell::kMixed: return mixed;
  }
  throw InternalError("bad chart cell");
}

ChartFormat parse_chart_format(std::string_view name) {
  if (name == "unicode") return ChartFormat::kUnicode;
  if (name == "ascii") return ChartFormat::kAscii;
  if (name == "latex") return ChartFormat::kLatex;
  throw DataError("unknown chart format '" + std::string(name) + "'");
}

ChartLevel parse_chart_level(std::string_view name) {
  if (name == "term") return ChartLevel::kTerm;
  if (name == "threshold") return ChartLevel::kThreshold;
  throw DataError("unknown chart level '" + std::string(name) + "'");
}

std::size_t display_width(std::string_view text) {
  std::size_t w = 0;
  for (unsigned char c : text) {
    if ((c & 0xC0) != 0x80) ++w;
  }
  return w;
}

std::string coordinate_label(const SweepResult& result, const SummaryRow& row) {
  const auto& c = row.coords;
  switch (result.settings.kind) {
    case SweepKind::kOutcome:
      return "thrY = " + format_number(c.thr_y.value_or(0));
    case SweepKind::kSingleCondition:
      return result.settings.sweep_var.value_or("threshold") + " = " +
             format_number(c.threshold.value_or(0));
    case SweepKind::kMultiCondition:
      return c.thr_x_label.value_or("");
    case SweepKind::kDual:
      return "thrY = " + format_number(c.thr_y.value_or(0)) + ", combo " +
             std::to_string(c.combo_id.value_or(0));
  }
  throw InternalError("bad sweep kind");
}

ConfigChart config_chart(const SweepResult& result, ChartLevel level) {
  const auto& conditions = result.settings.conditions;
  const std::size_t k = conditions.size();
  ConfigChart chart;
  chart.rows = conditions;
  chart.cells.assign(k, {});

  for (std::size_t r = 0; r < result.summary.size(); ++r) {
    auto models = models_for(result, r, level == ChartLevel::kTerm);
    if (models.empty()) continue;
    std::string coord = coordinate_label(result, result.summary[r]);

    if (level == ChartLevel::kThreshold) {
      chart.columns.push_back(coord);
      const auto& terms = models.front().terms;
      for (std::size_t i = 0; i < k; ++i) {
        Literal first = terms.front().literal(i);
        bool uniform = std::all_of(terms.begin(), terms.end(),
                                   [&](const Implicant& t) { return t.literal(i) == first; });
        chart.cells[i].push_back(uniform ? cell_for(first) : Cell::kMixed);
      }
      continue;
    }

    for (std::size_t s = 0; s < models.size(); ++s) {
      const auto& terms = models[s].terms;
      for (std::size_t j = 0; j < terms.size(); ++j) {
        std::string tag = models.size() > 1
                              ? "S" + std::to_string(s + 1) + ".M" + std::to_string(j + 1)
                              : "M" + std::to_string(j + 1);
        chart.columns.push_back(coord + " (" + tag + ")");
        for (std::size_t i = 0; i < k; ++i) chart.cells[i].push_back(cell_for(terms[j].literal(i)));
      }
    }
  }
  if (chart.columns.empty()) throw DataError("nothing to chart");
  return chart;
}

std::string render_chart(const ConfigChart& chart, ChartFormat format) {
  if (chart.columns.empty() || chart.rows.empty()) throw DataError("nothing to chart");
  const SymbolSet symbols = SymbolSet::for_format(format);
  bool any_mixed = false;
  for (const auto& row : chart.cells) {
    any_mixed = any_mixed || std::find(row.begin(), row.end(), Cell::kMixed) != row.end();
  }
  const std::size_t ncol = chart.columns.size();
  std::string out;

  if (format == ChartFormat::kLatex) {
    out += "\\begin{tabular}{l" + std::string(ncol, 'c') + "}\n\\toprule\n";
    for (const auto& label : chart.columns) out += " & " + latex_escape(label);
    out += " \\\\\n\\midrule\n";
    for (std::size_t i = 0; i < chart.rows.size(); ++i) {
      out += latex_escape(chart.rows[i]);
      for (Cell c : chart.cells[i]) out += " & " + symbols.glyph(c);
      out += " \\\\\n";
    }
    out += "\\bottomrule\n\\multicolumn{" + std::to_string(ncol + 1) + "}{l}{\\footnotesize " +
           symbols.present + " = present; " + symbols.absent + " = absent; ";
    if (any_mixed) out += symbols.mixed + " = mixed polarity across terms; ";
    out += "blank = don't care.}\n\\end{tabular}\n";
    return out;
  }

  std::size_t name_width = 0;
  for (const auto& r : chart.rows) name_width = std::max(name_width, display_width(r));
  std::size_t cell_width = std::to_string(ncol).size();
  for (const auto* g : {&symbols.present, &symbols.absent, &symbols.mixed}) {
    cell_width = std::max(cell_width, display_width(*g));
  }

  out += std::string(name_width, ' ');
  for (std::size_t j = 0; j < ncol; ++j) out += " | " + pad_right(std::to_string(j + 1), cell_width);
  out += "\n";
  for (std::size_t i = 0; i < chart.rows.size(); ++i) {
    out += pad_right(chart.rows[i], name_width);
    for (Cell c : chart.cells[i]) out += " | " + pad_right(symbols.glyph(c), cell_width);
    out += "\n";
  }
  out += "\n";
  for (std::size_t j = 0; j < ncol; ++j) {
    out += pad_right(std::to_string(j + 1), cell_width) + ": " + chart.columns[j] + "\n";
  }
  out += "\n" + symbols.present + " = present; " + symbols.absent + " = absent; ";
  if (any_mixed) out += symbols.mixed + " = mixed polarity across terms; ";
  out += "blank = don't care\n";
  return out;
}

}  // namespace qsweep
