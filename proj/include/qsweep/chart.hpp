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

// Configuration charts: conditions as rows, solution terms (or whole sweep
// points) as columns.

#ifndef QSWEEP_CHART_HPP_
#define QSWEEP_CHART_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsweep/sweep.hpp"

namespace qsweep {

enum class Cell { kPresent, kAbsent, kBlank, kMixed };

enum class ChartLevel { kTerm, kThreshold };

enum class ChartFormat { kUnicode, kAscii, kLatex };

struct SymbolSet {
  std::string present;
  std::string absent;
  std::string blank;
  std::string mixed;

  static SymbolSet unicode();
  static SymbolSet ascii();
  static SymbolSet latex();
  static SymbolSet for_format(ChartFormat format);

  const std::string& glyph(Cell cell) const;
};

struct ConfigChart {
  std::vector<std::string> rows;     // condition names
  std::vector<std::string> columns;  // column labels
  std::vector<std::vector<Cell>> cells;  // cells[row][column]

  friend bool operator==(const ConfigChart&, const ConfigChart&) = default;
};

// Throws DataError on anything but "unicode", "ascii", "latex".
ChartFormat parse_chart_format(std::string_view name);
// "term" or "threshold".
ChartLevel parse_chart_level(std::string_view name);

// "thrY = 6", "B = 3", "A=2, B=3", "thrY = 6, combo 2".
std::string coordinate_label(const SweepResult& result, const SummaryRow& row);

// Term level takes every model from the details when present, otherwise the
// first model as printed in the summary. Columns are "<coord> (M<j>)", or
// "<coord> (S<s>.M<j>)" when a point has several models. Threshold level uses
// the first model of each point; rows without a solution get no column.
// Throws DataError("nothing to chart") when no row has a solution.
ConfigChart config_chart(const SweepResult& result, ChartLevel level);

// unicode/ascii: aligned grid with numbered columns, a legend and a symbol
// footnote. latex: a tabular environment.
std::string render_chart(const ConfigChart& chart, ChartFormat format);

// Printed columns of a UTF-8 string.
std::size_t display_width(std::string_view text);

}  // namespace qsweep

#endif  // QSWEEP_CHART_HPP_
