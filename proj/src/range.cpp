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

#include "qsweep/range.hpp"

#include <cmath>

#include "qsweep/error.hpp"
#include "qsweep/format.hpp"

namespace qsweep {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

double number_or_throw(std::string_view text, std::string_view context) {
  auto v = parse_number(trim(text));
  if (!v) {
    throw DataError("malformed " + std::string(context) + ": '" + std::string(text) +
                    "' is not a number");
  }
  return *v;
}

}  // namespace

std::vector<double> expand_range(double lo, double hi, double step) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !std::isfinite(step)) {
    throw DataError("range bounds must be finite");
  }
  if (step <= 0) throw DataError("range step must be positive");
  if (lo > hi) throw DataError("range start exceeds its end");
  double span = (hi - lo) / step;
  if (span >= static_cast<double>(kMaxRangeSize)) throw DataError("range has too many values");
  auto count = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
  std::vector<double> values;
  values.reserve(count);
  for (std::size_t i = 0; i < count; ++i) values.push_back(lo + static_cast<double>(i) * step);
  return values;
}

std::vector<double> parse_range(std::string_view text) {
  auto parts = split(text, ':');
  if (parts.size() > 3) throw DataError("malformed range '" + std::string(text) + "'");
  double lo = number_or_throw(parts[0], "range");
  if (parts.size() == 1) return {lo};
  double hi = number_or_throw(parts[1], "range");
  double step = parts.size() == 3 ? number_or_throw(parts[2], "range") : 1.0;
  return expand_range(lo, hi, step);
}

std::optional<std::string> format_range(const std::vector<double>& values) {
  if (values.empty()) return std::nullopt;
  if (values.size() == 1) return format_number(values[0]);
  double step = values[1] - values[0];
  if (!(step > 0)) return std::nullopt;
  std::vector<double> again;
  try {
    again = expand_range(values.front(), values.back(), step);
  } catch (const DataError&) {
    return std::nullopt;
  }
  if (again != values) return std::nullopt;
  std::string text = format_number(values.front()) + ":" + format_number(values.back());
  if (step != 1.0) text += ":" + format_number(step);
  // Shortest digits of the step may not reproduce it; confirm.
  if (parse_range(text) != values) return std::nullopt;
  return text;
}

std::vector<GridAxis> parse_axes(std::string_view text) {
  std::vector<GridAxis> axes;
  for (auto item : split(text, ',')) {
    auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw DataError("malformed sweep list entry '" + std::string(item) + "' (want NAME=LO:HI)");
    }
    GridAxis axis;
    axis.name = std::string(trim(item.substr(0, eq)));
    if (axis.name.empty()) throw DataError("sweep list entry without a name");
    axis.thresholds = parse_range(item.substr(eq + 1));
    axes.push_back(std::move(axis));
  }
  return axes;
}

std::optional<std::string> format_axes(const std::vector<GridAxis>& axes) {
  std::string text;
  for (const auto& axis : axes) {
    auto range = format_range(axis.thresholds);
    if (!range) return std::nullopt;
    if (!text.empty()) text += ",";
    text += axis.name + "=" + *range;
  }
  return text;
}

ThresholdAssignment parse_assignment(std::string_view text) {
  ThresholdAssignment out;
  for (auto item : split(text, ',')) {
    auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw DataError("malformed threshold '" + std::string(item) + "' (want NAME=VALUE)");
    }
    std::string name(trim(item.substr(0, eq)));
    if (name.empty()) throw DataError("threshold without a name");
    if (out.find(name)) throw DataError("threshold for '" + name + "' given twice");
    out.set(name, number_or_throw(item.substr(eq + 1), "threshold"));
  }
  return out;
}

std::string format_assignment(const ThresholdAssignment& assignment) {
  std::string text;
  for (const auto& [name, value] : assignment.entries()) {
    if (!text.empty()) text += ",";
    text += name + "=" + format_number(value);
  }
  return text;
}

}  // namespace qsweep
