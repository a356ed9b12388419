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

// Raw case data, dichotomization, and threshold grids.

#ifndef QSWEEP_DATA_HPP_
#define QSWEEP_DATA_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qsweep/case_set.hpp"

namespace qsweep {

struct Column {
  std::string name;
  std::vector<double> values;

  friend bool operator==(const Column&, const Column&) = default;
};

class RawDataset;

// Parses CSV text (header row, comma separated, "." decimal point, optional
// double-quoted fields). Without `id_column`, cases are labelled "1", "2", ...
RawDataset parse_csv(std::string_view text,
                     const std::optional<std::string>& id_column = std::nullopt);

// Case-identified table of finite real variables. Construction validates:
// at least one case, equal column lengths, unique non-empty names and ids.
class RawDataset {
 public:
  RawDataset(std::vector<std::string> case_ids, std::vector<Column> columns);

  const std::vector<std::string>& case_ids() const { return case_ids_; }
  const std::vector<Column>& columns() const { return columns_; }
  std::size_t case_count() const { return case_ids_.size(); }

  bool has_column(std::string_view name) const;
  // Throws DataError for an unknown name.
  std::span<const double> column(std::string_view name) const;

  // SHA-256 of the canonicalized CSV text this dataset was read from; for
  // datasets built in memory, of the canonical write_csv() serialization.
  std::string digest() const;

  friend bool operator==(const RawDataset& a, const RawDataset& b) {
    return a.case_ids_ == b.case_ids_ && a.columns_ == b.columns_;
  }

 private:
  friend RawDataset parse_csv(std::string_view, const std::optional<std::string>&);

  std::vector<std::string> case_ids_;
  std::vector<Column> columns_;
  std::optional<std::string> source_digest_;
};

// Reads and parses a file. Missing/unreadable files raise IoError.
RawDataset load_csv(const std::filesystem::path& path,
                    const std::optional<std::string>& id_column = std::nullopt);

// Serializes with the case ids in a leading column named `id_column`.
std::string write_csv(const RawDataset& data, std::string_view id_column = "id");

struct OutcomeSpec {
  std::string name;
  bool negated = false;

  // "Y" or "~Y".
  static OutcomeSpec parse(std::string_view text);
  std::string label() const { return negated ? "~" + name : name; }

  friend bool operator==(const OutcomeSpec&, const OutcomeSpec&) = default;
};

// Ordered name -> threshold map.
class ThresholdAssignment {
 public:
  ThresholdAssignment() = default;
  ThresholdAssignment(std::initializer_list<std::pair<std::string, double>> entries);

  // Replaces an existing entry or appends a new one.
  void set(std::string name, double threshold);
  std::optional<double> find(std::string_view name) const;
  // Throws DataError when absent.
  double at(std::string_view name) const;

  const std::vector<std::pair<std::string, double>>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // "X1=6, X2=7"
  std::string label() const;
  // Inverse of label(). Throws DataError on malformed text.
  static ThresholdAssignment parse_label(std::string_view label);

  friend bool operator==(const ThresholdAssignment&, const ThresholdAssignment&) = default;

 private:
  std::vector<std::pair<std::string, double>> entries_;
};

struct BinaryDataset {
  std::vector<std::string> case_ids;
  std::vector<std::string> conditions;
  std::vector<CaseSet> condition_sets;  // parallel to `conditions`
  CaseSet outcome;
  OutcomeSpec outcome_spec;
  ThresholdAssignment condition_thresholds;
  double outcome_threshold = 0.0;

  std::size_t case_count() const { return case_ids.size(); }
  std::vector<std::uint8_t> condition_memberships(std::size_t condition) const {
    return condition_sets.at(condition).to_bits();
  }
  std::vector<std::uint8_t> outcome_membership() const { return outcome.to_bits(); }
};

// Membership is 1 iff value >= threshold; a negated outcome is complemented
// after thresholding.
BinaryDataset dichotomize(const RawDataset& raw, const std::vector<std::string>& conditions,
                          const ThresholdAssignment& condition_thresholds,
                          const OutcomeSpec& outcome, double outcome_threshold);

struct GridAxis {
  std::string name;
  std::vector<double> thresholds;

  friend bool operator==(const GridAxis&, const GridAxis&) = default;
};

struct GridPoint {
  std::size_t combo_id = 0;  // 1-based
  ThresholdAssignment assignment;
  std::string label;

  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

struct SweepGrid {
  std::vector<GridAxis> axes;
  std::vector<GridPoint> points;
};

// Cartesian product of the axes; the first axis varies fastest.
SweepGrid expand_grid(std::vector<GridAxis> axes);

}  // namespace qsweep

#endif  // QSWEEP_DATA_HPP_
