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

#include "qsweep/truth_table.hpp"

#include "qsweep/error.hpp"
#include "qsweep/format.hpp"
#include "qsweep/simd/kernels.hpp"

namespace qsweep {

char outcome_code(RowOutcome out) {
  switch (out) {
    case RowOutcome::kPositive:
      return '1';
    case RowOutcome::kNegative:
      return '0';
    case RowOutcome::kRemainder:
      return '?';
  }
  return '?';
}

std::vector<std::uint32_t> TruthTable::configs_with(RowOutcome out) const {
  std::vector<std::uint32_t> configs;
  for (const auto& row : rows) {
    if (row.out == out) configs.push_back(row.config);
  }
  return configs;
}

std::string TruthTable::config_bits(std::uint32_t config) const {
  const std::size_t k = conditions.size();
  std::string bits(k, '0');
  for (std::size_t i = 0; i < k; ++i) {
    if ((config >> (k - 1 - i)) & 1) bits[i] = '1';
  }
  return bits;
}

TruthTable build_truth_table(const BinaryDataset& data, double incl_cut, std::size_t n_cut) {
  const std::size_t k = data.conditions.size();
  if (k == 0) throw DataError("truth table needs at least one condition");
  if (k > kMaxConditions) {
    throw DataError("too many conditions (" + std::to_string(k) + "); the limit is " +
                    std::to_string(kMaxConditions));
  }
  if (!(incl_cut > 0.0 && incl_cut <= 1.0)) {
    throw DataError("consistency cutoff must lie in (0, 1], got " + format_number(incl_cut));
  }
  if (n_cut < 1) throw DataError("frequency cutoff must be at least 1");
  const std::size_t n_cases = data.case_count();
  if (n_cases == 0) throw DataError("truth table needs at least one case");

  // Per-case configuration codes, one shifted OR per condition.
  std::vector<std::uint32_t> codes(n_cases, 0);
  const auto& kernels = simd::active();
  for (std::size_t c = 0; c < k; ++c) {
    kernels.or_shifted_bits(codes.data(), n_cases, data.condition_sets[c].words().data(),
                            static_cast<unsigned>(k - 1 - c));
  }

  TruthTable tt;
  tt.conditions = data.conditions;
  tt.incl_cut = incl_cut;
  tt.n_cut = n_cut;
  tt.outcome = data.outcome_spec;
  tt.rows.resize(std::size_t{1} << k);
  for (std::size_t r = 0; r < tt.rows.size(); ++r) tt.rows[r].config = static_cast<std::uint32_t>(r);
  for (std::size_t i = 0; i < n_cases; ++i) {
    TruthTableRow& row = tt.rows[codes[i]];
    ++row.n;
    if (data.outcome.test(i)) ++row.n_outcome;
    row.cases.push_back(data.case_ids[i]);
  }
  for (auto& row : tt.rows) {
    if (row.n > 0) {
      row.incl = static_cast<double>(row.n_outcome) / static_cast<double>(row.n);
    }
    if (row.n < n_cut) {
      row.out = RowOutcome::kRemainder;
    } else {
      row.out = *row.incl >= incl_cut ? RowOutcome::kPositive : RowOutcome::kNegative;
    }
  }
  return tt;
}

}  // namespace qsweep
