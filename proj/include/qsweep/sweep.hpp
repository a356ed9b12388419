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

// Threshold sweeps. Every grid point runs the same pipeline
//   dichotomize -> build_truth_table -> minimize -> fit
// independently; rows are assembled in a fixed order per sweep kind no
// matter how (or how concurrently) the points were evaluated.

#ifndef QSWEEP_SWEEP_HPP_
#define QSWEEP_SWEEP_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qsweep/data.hpp"
#include "qsweep/metrics.hpp"
#include "qsweep/minimize.hpp"
#include "qsweep/truth_table.hpp"

namespace qsweep {

enum class SweepKind {
  kOutcome,          // otsweep: vary thrY, conditions fixed
  kSingleCondition,  // ctsweeps: vary one condition threshold
  kMultiCondition,   // ctsweepm: grid over all condition thresholds
  kDual,             // dtsweep: grid over conditions x outcome thresholds
};

// "otsweep", "ctsweeps", "ctsweepm", "dtsweep"
const char* sweep_kind_name(SweepKind kind);
std::optional<SweepKind> parse_sweep_kind(std::string_view name);

struct SweepOptions {
  double incl_cut = 0.8;
  std::size_t n_cut = 1;
  bool include_remainders = false;
  std::optional<std::vector<Expectation>> dir_exp;
  bool return_details = false;
  // Worker threads for grid evaluation; 0 picks the hardware concurrency.
  unsigned threads = 1;
};

struct SweepSettings {
  SweepKind kind = SweepKind::kOutcome;
  OutcomeSpec outcome;
  std::vector<std::string> conditions;
  std::optional<double> thr_y;              // ctsweeps, ctsweepm
  ThresholdAssignment thr_x;                // otsweep
  std::optional<double> thr_x_default;      // ctsweeps
  std::optional<std::string> sweep_var;     // ctsweeps
  std::vector<double> sweep_range;          // otsweep/dtsweep: thrY; ctsweeps: sweep_var
  std::vector<GridAxis> sweep_list;         // ctsweepm, dtsweep
  double incl_cut = 0.8;
  std::size_t n_cut = 1;
  bool include_remainders = false;
  std::optional<std::vector<Expectation>> dir_exp;
  bool return_details = false;
  std::string dataset_digest;
  std::size_t n_cases = 0;
  std::string version;

  SweepOptions options() const;

  friend bool operator==(const SweepSettings&, const SweepSettings&) = default;
};

// Which coordinates are present depends on the sweep kind.
struct Coordinates {
  std::optional<double> thr_y;
  std::optional<double> threshold;        // ctsweeps
  std::optional<std::size_t> combo_id;    // ctsweepm, dtsweep
  std::optional<std::string> thr_x_label; // "X1=6, X2=7"

  friend bool operator==(const Coordinates&, const Coordinates&) = default;
};

struct SummaryRow {
  Coordinates coords;
  std::string expression;  // first model, or "No solution"
  std::optional<double> incl_s;
  std::optional<double> cov_s;
  std::size_t n_solutions = 0;

  friend bool operator==(const SummaryRow&, const SummaryRow&) = default;
};

struct PointDetail {
  Coordinates coords;
  ThresholdAssignment condition_thresholds;
  double outcome_threshold = 0.0;
  TruthTable truth_table;
  SolutionSet solution;
  std::vector<FitStats> fits;  // one per model
  std::vector<NecessityRow> necessity;

  friend bool operator==(const PointDetail&, const PointDetail&) = default;
};

struct SweepResult {
  SweepSettings settings;
  std::vector<SummaryRow> summary;
  SweepStats stats;
  std::optional<std::vector<PointDetail>> details;

  friend bool operator==(const SweepResult&, const SweepResult&) = default;
};

// One full pipeline run at fixed thresholds.
PointDetail run_pipeline(const RawDataset& raw, const OutcomeSpec& outcome,
                         const std::vector<std::string>& conditions,
                         const ThresholdAssignment& condition_thresholds,
                         double outcome_threshold, const SweepOptions& options);

SummaryRow summarize(const PointDetail& point);

SweepResult ot_sweep(const RawDataset& raw, const OutcomeSpec& outcome,
                     const std::vector<std::string>& conditions,
                     std::vector<double> sweep_range, const ThresholdAssignment& thr_x,
                     const SweepOptions& options = {});

// `thr_x_default` applies to every condition except `sweep_var`.
SweepResult ct_sweep_s(const RawDataset& raw, const OutcomeSpec& outcome,
                       const std::vector<std::string>& conditions, double thr_y,
                       const std::string& sweep_var, std::vector<double> sweep_range,
                       double thr_x_default, const SweepOptions& options = {});

// Every condition needs an axis; use a single value to hold one fixed.
SweepResult ct_sweep_m(const RawDataset& raw, const OutcomeSpec& outcome,
                       const std::vector<std::string>& conditions, double thr_y,
                       const std::vector<GridAxis>& sweep_list,
                       const SweepOptions& options = {});

SweepResult dt_sweep(const RawDataset& raw, const OutcomeSpec& outcome,
                     const std::vector<std::string>& conditions,
                     const std::vector<GridAxis>& sweep_list_x,
                     std::vector<double> sweep_range_y, const SweepOptions& options = {});

// Re-runs the sweep described by `settings`. The digest is checked against
// the dataset.
SweepResult rerun(const RawDataset& raw, const SweepSettings& settings, unsigned threads = 1);

}  // namespace qsweep

#endif  // QSWEEP_SWEEP_HPP_
