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

// Crisp-set consistency and coverage.
//
// With S the cases covered by a model and Y the outcome set:
//   inclS = |S ∩ Y| / |S|,  covS = |S ∩ Y| / |Y|.
// Per term t: incl = |t ∩ Y| / |t|, cov = |t ∩ Y| / |Y|, and covU counts
// only the outcome cases that no other term of the model covers.
// Necessity of X: inclN = |X ∩ Y| / |Y|, covN = |X ∩ Y| / |X|.
// A ratio with a zero denominator is undefined (nullopt).

#ifndef QSWEEP_METRICS_HPP_
#define QSWEEP_METRICS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qsweep/data.hpp"
#include "qsweep/implicant.hpp"

namespace qsweep {

struct TermFit {
  std::optional<double> incl;
  std::optional<double> cov;
  std::optional<double> cov_unique;

  friend bool operator==(const TermFit&, const TermFit&) = default;
};

struct FitStats {
  std::optional<double> incl_s;
  std::optional<double> cov_s;
  std::vector<TermFit> per_term;  // parallel to the model's terms

  friend bool operator==(const FitStats&, const FitStats&) = default;
};

FitStats solution_fit(const Model& model, const BinaryDataset& data);

// Cases covered by a single term.
CaseSet term_cases(const Implicant& term, const BinaryDataset& data);

struct NecessityRow {
  std::string condition;  // "A" or "~A"
  std::optional<double> incl_n;
  std::optional<double> cov_n;

  friend bool operator==(const NecessityRow&, const NecessityRow&) = default;
};

// Rows A, ~A, B, ~B, ... in condition order.
std::vector<NecessityRow> necessity(const BinaryDataset& data);

struct SweepStats {
  std::size_t n_thresholds = 0;
  std::size_t unique_solutions = 0;
  double stability = 1.0;
  std::optional<std::pair<double, double>> incl_range;
  std::optional<std::pair<double, double>> cov_range;

  friend bool operator==(const SweepStats&, const SweepStats&) = default;
};

struct FitPoint {
  std::string expression;
  std::optional<double> incl_s;
  std::optional<double> cov_s;
};

// stability = 1 - (unique - 1) / (n - 1), and 1 for a single row. Ranges
// skip undefined values.
SweepStats sweep_stats(const std::vector<FitPoint>& rows);

}  // namespace qsweep

#endif  // QSWEEP_METRICS_HPP_
