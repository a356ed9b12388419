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

#ifndef QSWEEP_TRUTH_TABLE_HPP_
#define QSWEEP_TRUTH_TABLE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsweep/data.hpp"

namespace qsweep {

// Conditions per analysis are capped so that a configuration fits in a
// 32-bit code and the exact minimizer stays tractable.
inline constexpr std::size_t kMaxConditions = 16;

enum class RowOutcome { kPositive, kNegative, kRemainder };

// '1', '0' or '?'.
char outcome_code(RowOutcome out);

struct TruthTableRow {
  // Configuration code; condition 0 is the most significant of the k bits.
  std::uint32_t config = 0;
  std::size_t n = 0;
  std::size_t n_outcome = 0;   // covered cases with outcome membership 1
  std::optional<double> incl;  // n_outcome / n, undefined when n == 0
  RowOutcome out = RowOutcome::kRemainder;
  std::vector<std::string> cases;

  friend bool operator==(const TruthTableRow&, const TruthTableRow&) = default;
};

struct TruthTable {
  std::vector<std::string> conditions;
  std::vector<TruthTableRow> rows;  // all 2^k configurations, ascending
  double incl_cut = 0.8;
  std::size_t n_cut = 1;
  OutcomeSpec outcome;

  std::size_t condition_count() const { return conditions.size(); }
  std::vector<std::uint32_t> configs_with(RowOutcome out) const;
  // "110" for config 6 with k = 3.
  std::string config_bits(std::uint32_t config) const;

  friend bool operator==(const TruthTable&, const TruthTable&) = default;
};

TruthTable build_truth_table(const BinaryDataset& data, double incl_cut, std::size_t n_cut);

}  // namespace qsweep

#endif  // QSWEEP_TRUTH_TABLE_HPP_
