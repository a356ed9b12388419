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

#include "qsweep/data.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_set>

#include "qsweep/digest.hpp"
#include "qsweep/error.hpp"
#include "qsweep/format.hpp"

namespace qsweep {
namespace {

using Record = std::vector<std::string>;

// RFC 4180-style tokenizer. Empty lines are dropped.
std::vector<Record> tokenize_csv(std::string_view text) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);
  std::vector<Record> records;
  Record current;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;
  auto end_field = [&] {
    current.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_record = [&] {
    end_field();
    const bool blank = current.size() == 1 && trim(current[0]).empty();
    if (!blank) records.push_back(std::move(current));
    current.clear();
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field.push_back(c);
      }
      continue;
    }
    if (c == '"' && trim(field).empty()) {
      field.clear();
      in_quotes = true;
      field_started = true;
    } else if (c == ',') {
      end_field();
    } else if (c == '\n' || c == '\r') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      end_record();
    } else {
      field.push_back(c);
      field_started = true;
    }
  }
  if (in_quotes) throw DataError("CSV: unterminated quoted field");
  if (field_started || !field.empty() || !current.empty()) end_record();
  return records;
}

bool needs_quotes(std::string_view s) {
  return s.find_first_of(",\"\r\n") != std::string_view::npos ||
         (!s.empty() && (s.front() == ' ' || s.back() == ' '));
}

void append_field(std::string& out, std::string_view s) {
  if (!needs_quotes(s)) {
    out.append(s);
    return;
  }
  out.push_back('"');
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
}

}  // namespace

RawDataset::RawDataset(std::vector<std::string> case_ids, std::vector<Column> columns)
    : case_ids_(std::move(case_ids)), columns_(std::move(columns)) {
  if (case_ids_.empty()) throw DataError("dataset has no cases");
  std::unordered_set<std::string> seen_ids;
  for (const auto& id : case_ids_) {
    if (!seen_ids.insert(id).second) throw DataError("duplicate case id '" + id + "'");
  }
  std::unordered_set<std::string> seen_names;
  for (const auto& col : columns_) {
    if (col.name.empty()) throw DataError("empty variable name");
    if (!seen_names.insert(col.name).second) {
      throw DataError("duplicate variable name '" + col.name + "'");
    }
    if (col.values.size() != case_ids_.size()) {
      throw DataError("column '" + col.name + "' has " + std::to_string(col.values.size()) +
                      " values, expected " + std::to_string(case_ids_.size()));
    }
    for (std::size_t i = 0; i < col.values.size(); ++i) {
      if (!std::isfinite(col.values[i])) {
        throw DataError("column '" + col.name + "', case '" + case_ids_[i] +
                        "': value is not finite");
      }
    }
  }
}

bool RawDataset::has_column(std::string_view name) const {
  return std::any_of(columns_.begin(), columns_.end(),
                     [&](const Column& c) { return c.name == name; });
}

std::span<const double> RawDataset::column(std::string_view name) const {
  for (const auto& c : columns_) {
    if (c.name == name) return c.values;
  }
  throw DataError("unknown variable '" + std::string(name) + "'");
}

std::string RawDataset::digest() const {
  if (source_digest_) return *source_digest_;
  return sha256_hex(canonicalize_text(write_csv(*this)));
}

RawDataset parse_csv(std::string_view text, const std::optional<std::string>& id_column) {
  const std::vector<Record> records = tokenize_csv(text);
  if (records.empty()) throw DataError("CSV: missing header row");

  std::vector<std::string> header;
  for (const auto& h : records[0]) header.emplace_back(trim(h));
  std::set<std::string> names;
  for (const auto& h : header) {
    if (h.empty()) throw DataError("CSV: empty column name in header");
    if (!names.insert(h).second) throw DataError("CSV: duplicate header name '" + h + "'");
  }
  std::optional<std::size_t> id_index;
  if (id_column) {
    const auto it = std::find(header.begin(), header.end(), *id_column);
    if (it == header.end()) throw DataError("CSV: id column '" + *id_column + "' not found");
    id_index = static_cast<std::size_t>(it - header.begin());
  }

  std::vector<std::string> ids;
  std::vector<Column> columns;
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (c != id_index) columns.push_back({header[c], {}});
  }
  std::unordered_set<std::string> seen_ids;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const Record& rec = records[r];
    if (rec.size() != header.size()) {
      throw DataError("CSV: row " + std::to_string(r) + " has " + std::to_string(rec.size()) +
                      " fields, expected " + std::to_string(header.size()));
    }
    std::size_t out_col = 0;
    for (std::size_t c = 0; c < rec.size(); ++c) {
      if (c == id_index) {
        std::string id(trim(rec[c]));
        if (!seen_ids.insert(id).second) {
          throw DataError("CSV: row " + std::to_string(r) + ": duplicate case id '" + id + "'");
        }
        ids.push_back(std::move(id));
        continue;
      }
      const auto value = parse_number(rec[c]);
      if (!value) {
        throw DataError("CSV: row " + std::to_string(r) + ", column " + header[c] + ": '" +
                        std::string(trim(rec[c])) + "' is not a finite number");
      }
      columns[out_col++].values.push_back(*value);
    }
    if (!id_index) ids.push_back(std::to_string(r));
  }
  if (ids.empty()) throw DataError("CSV: no data rows");
  RawDataset data(std::move(ids), std::move(columns));
  data.source_digest_ = sha256_hex(canonicalize_text(text));
  return data;
}

RawDataset load_csv(const std::filesystem::path& path, const std::optional<std::string>& id_column) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error reading '" + path.string() + "'");
  return parse_csv(buf.str(), id_column);
}

std::string write_csv(const RawDataset& data, std::string_view id_column) {
  std::string out;
  append_field(out, id_column);
  for (const auto& col : data.columns()) {
    out.push_back(',');
    append_field(out, col.name);
  }
  out.push_back('\n');
  for (std::size_t i = 0; i < data.case_count(); ++i) {
    append_field(out, data.case_ids()[i]);
    for (const auto& col : data.columns()) {
      out.push_back(',');
      out.append(format_number(col.values[i]));
    }
    out.push_back('\n');
  }
  return out;
}

OutcomeSpec OutcomeSpec::parse(std::string_view text) {
  text = trim(text);
  OutcomeSpec spec;
  if (text.starts_with('~')) {
    spec.negated = true;
    text.remove_prefix(1);
  }
  spec.name = std::string(trim(text));
  if (spec.name.empty()) throw DataError("empty outcome name");
  return spec;
}

ThresholdAssignment::ThresholdAssignment(
    std::initializer_list<std::pair<std::string, double>> entries) {
  for (const auto& [name, value] : entries) set(name, value);
}

void ThresholdAssignment::set(std::string name, double threshold) {
  for (auto& [n, v] : entries_) {
    if (n == name) {
      v = threshold;
      return;
    }
  }
  entries_.emplace_back(std::move(name), threshold);
}

std::optional<double> ThresholdAssignment::find(std::string_view name) const {
  for (const auto& [n, v] : entries_) {
    if (n == name) return v;
  }
  return std::nullopt;
}

double ThresholdAssignment::at(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw DataError("no threshold for '" + std::string(name) + "'");
}

std::string ThresholdAssignment::label() const {
  std::string out;
  for (const auto& [name, value] : entries_) {
    if (!out.empty()) out += ", ";
    out += name + "=" + format_number(value);
  }
  return out;
}

ThresholdAssignment ThresholdAssignment::parse_label(std::string_view label) {
  ThresholdAssignment out;
  std::size_t start = 0;
  while (start <= label.size()) {
    std::size_t end = label.find(',', start);
    if (end == std::string_view::npos) end = label.size();
    const std::string_view item = trim(label.substr(start, end - start));
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw DataError("malformed threshold '" + std::string(item) + "' (expected NAME=VALUE)");
    }
    const std::string name(trim(item.substr(0, eq)));
    const auto value = parse_number(item.substr(eq + 1));
    if (name.empty() || !value) {
      throw DataError("malformed threshold '" + std::string(item) + "' (expected NAME=VALUE)");
    }
    if (out.find(name)) throw DataError("duplicate threshold for '" + name + "'");
    out.set(name, *value);
    start = end + 1;
  }
  return out;
}

BinaryDataset dichotomize(const RawDataset& raw, const std::vector<std::string>& conditions,
                          const ThresholdAssignment& condition_thresholds,
                          const OutcomeSpec& outcome, double outcome_threshold) {
  if (!std::isfinite(outcome_threshold)) throw DataError("outcome threshold is not finite");
  if (!raw.has_column(outcome.name)) throw DataError("unknown outcome '" + outcome.name + "'");
  std::set<std::string> seen;
  for (const auto& c : conditions) {
    if (!raw.has_column(c)) throw DataError("unknown condition '" + c + "'");
    if (!seen.insert(c).second) throw DataError("condition '" + c + "' listed twice");
    if (c == outcome.name) {
      throw DataError("outcome '" + outcome.name + "' is also listed as a condition");
    }
    if (!condition_thresholds.find(c)) throw DataError("no threshold for condition '" + c + "'");
  }
  for (const auto& [name, value] : condition_thresholds.entries()) {
    if (!seen.contains(name)) {
      throw DataError("threshold given for '" + name + "', which is not a condition");
    }
    if (!std::isfinite(value)) throw DataError("threshold for '" + name + "' is not finite");
  }

  BinaryDataset out;
  out.case_ids = raw.case_ids();
  out.conditions = conditions;
  out.outcome_spec = outcome;
  out.outcome_threshold = outcome_threshold;
  for (const auto& c : conditions) {
    const double tau = condition_thresholds.at(c);
    out.condition_thresholds.set(c, tau);
    out.condition_sets.push_back(CaseSet::at_least(raw.column(c), tau));
  }
  out.outcome = CaseSet::at_least(raw.column(outcome.name), outcome_threshold);
  if (outcome.negated) out.outcome = out.outcome.complement();
  return out;
}

SweepGrid expand_grid(std::vector<GridAxis> axes) {
  if (axes.empty()) throw DataError("threshold grid has no axes");
  std::set<std::string> names;
  std::size_t total = 1;
  for (const auto& axis : axes) {
    if (axis.name.empty()) throw DataError("threshold grid axis has an empty name");
    if (!names.insert(axis.name).second) {
      throw DataError("duplicate threshold grid axis '" + axis.name + "'");
    }
    if (axis.thresholds.empty()) {
      throw DataError("threshold grid axis '" + axis.name + "' has no values");
    }
    total *= axis.thresholds.size();
  }
  SweepGrid grid;
  grid.points.reserve(total);
  std::vector<std::size_t> index(axes.size(), 0);
  for (std::size_t id = 1; id <= total; ++id) {
    GridPoint point;
    point.combo_id = id;
    for (std::size_t a = 0; a < axes.size(); ++a) {
      point.assignment.set(axes[a].name, axes[a].thresholds[index[a]]);
    }
    point.label = point.assignment.label();
    grid.points.push_back(std::move(point));
    // Odometer increment, first axis fastest.
    for (std::size_t a = 0; a < axes.size(); ++a) {
      if (++index[a] < axes[a].thresholds.size()) break;
      index[a] = 0;
    }
  }
  grid.axes = std::move(axes);
  return grid;
}

}  // namespace qsweep
