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

#include "qsweep/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <set>
#include <thread>
#include <utility>

#include "qsweep/error.hpp"
#include "qsweep/expression.hpp"
#include "qsweep/version.hpp"

namespace qsweep {

namespace {

void sort_unique(std::vector<double>& values, const char* what) {
  if (values.empty()) throw DataError(std::string(what) + " is empty");
  for (double v : values) {
    if (!std::isfinite(v)) throw DataError(std::string(what) + " contains a non-finite value");
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
}

void check_conditions(const std::vector<std::string>& conditions) {
  if (conditions.empty()) throw DataError("no conditions given");
  std::set<std::string> seen;
  for (const auto& c : conditions) {
    if (!seen.insert(c).second) throw DataError("duplicate condition '" + c + "'");
  }
}

void check_axes(const std::vector<std::string>& conditions, const std::vector<GridAxis>& axes) {
  for (const auto& axis : axes) {
    if (std::find(conditions.begin(), conditions.end(), axis.name) == conditions.end()) {
      throw DataError("sweep axis '" + axis.name + "' is not a condition");
    }
    for (double v : axis.thresholds) {
      if (!std::isfinite(v)) {
        throw DataError("sweep axis '" + axis.name + "' contains a non-finite value");
      }
    }
  }
  for (const auto& c : conditions) {
    bool found = std::any_of(axes.begin(), axes.end(),
                             [&](const GridAxis& a) { return a.name == c; });
    if (!found) throw DataError("condition '" + c + "' has no sweep axis");
  }
}

// Runs task(i) for i in [0, n). Any exception is rethrown after all workers
// finish; the one from the lowest index wins so failures are deterministic.
void run_tasks(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& task) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) task(i);
    return;
  }
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        task(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

SweepSettings base_settings(SweepKind kind, const RawDataset& raw, const OutcomeSpec& outcome,
                            const std::vector<std::string>& conditions,
                            const SweepOptions& options) {
  SweepSettings s;
  s.kind = kind;
  s.outcome = outcome;
  s.conditions = conditions;
  s.incl_cut = options.incl_cut;
  s.n_cut = options.n_cut;
  s.include_remainders = options.include_remainders;
  s.dir_exp = options.dir_exp;
  s.return_details = options.return_details;
  s.dataset_digest = raw.digest();
  s.n_cases = raw.case_count();
  s.version = std::string(kVersion);
  return s;
}

struct Task {
  Coordinates coords;
  ThresholdAssignment thresholds;
  double thr_y = 0.0;
};

SweepResult evaluate(const RawDataset& raw, SweepSettings settings, const std::vector<Task>& tasks,
                     const SweepOptions& options) {
  // Fail fast on option errors rather than once per point.
  if (options.dir_exp) {
    if (!options.include_remainders) {
      throw DataError("directional expectations require remainder inclusion");
    }
    if (options.dir_exp->size() != settings.conditions.size()) {
      throw DataError("directional expectations need one entry per condition");
    }
  }
  std::vector<PointDetail> points(tasks.size());
  run_tasks(tasks.size(), options.threads, [&](std::size_t i) {
    points[i] = run_pipeline(raw, settings.outcome, settings.conditions, tasks[i].thresholds,
                             tasks[i].thr_y, options);
    points[i].coords = tasks[i].coords;
  });

  SweepResult result;
  result.settings = std::move(settings);
  std::vector<FitPoint> fit_points;
  fit_points.reserve(points.size());
  for (const auto& p : points) {
    result.summary.push_back(summarize(p));
    const auto& row = result.summary.back();
    fit_points.push_back({row.expression, row.incl_s, row.cov_s});
  }
  result.stats = sweep_stats(fit_points);
  if (options.return_details) result.details = std::move(points);
  return result;
}

}  // namespace

const char* sweep_kind_name(SweepKind kind) {
  switch (kind) {
    case SweepKind::kOutcome: return "otsweep";
    case SweepKind::kSingleCondition: return "ctsweeps";
    case SweepKind::kMultiCondition: return "ctsweepm";
    case SweepKind::kDual: return "dtsweep";
  }
  throw InternalError("bad sweep kind");
}

std::optional<SweepKind> parse_sweep_kind(std::string_view name) {
  for (auto k : {SweepKind::kOutcome, SweepKind::kSingleCondition, SweepKind::kMultiCondition,
                 SweepKind::kDual}) {
    if (name == sweep_kind_name(k)) return k;
  }
  return std::nullopt;
}

SweepOptions SweepSettings::options() const {
  SweepOptions o;
  o.incl_cut = incl_cut;
  o.n_cut = n_cut;
  o.include_remainders = include_remainders;
  o.dir_exp = dir_exp;
  o.return_details = return_details;
  return o;
}

PointDetail run_pipeline(const RawDataset& raw, const OutcomeSpec& outcome,
                         const std::vector<std::string>& conditions,
                         const ThresholdAssignment& condition_thresholds,
                         double outcome_threshold, const SweepOptions& options) {
  BinaryDataset bin =
      dichotomize(raw, conditions, condition_thresholds, outcome, outcome_threshold);
  PointDetail p;
  p.condition_thresholds = bin.condition_thresholds;
  p.outcome_threshold = outcome_threshold;
  p.truth_table = build_truth_table(bin, options.incl_cut, options.n_cut);
  p.solution = minimize(p.truth_table, options.include_remainders, options.dir_exp);
  p.fits.reserve(p.solution.models.size());
  for (const auto& m : p.solution.models) p.fits.push_back(solution_fit(m, bin));
  p.necessity = necessity(bin);
  return p;
}

SummaryRow summarize(const PointDetail& point) {
  SummaryRow row;
  row.coords = point.coords;
  row.n_solutions = point.solution.models.size();
  if (row.n_solutions == 0) {
    row.expression = std::string(kNoSolution);
    return row;
  }
  row.expression = render_expression(point.solution.models.front(), point.truth_table.conditions);
  row.incl_s = point.fits.front().incl_s;
  row.cov_s = point.fits.front().cov_s;
  return row;
}

SweepResult ot_sweep(const RawDataset& raw, const OutcomeSpec& outcome,
                     const std::vector<std::string>& conditions, std::vector<double> sweep_range,
                     const ThresholdAssignment& thr_x, const SweepOptions& options) {
  check_conditions(conditions);
  sort_unique(sweep_range, "sweep range");
  auto settings = base_settings(SweepKind::kOutcome, raw, outcome, conditions, options);
  settings.thr_x = thr_x;
  settings.sweep_range = sweep_range;

  std::vector<Task> tasks;
  for (double y : sweep_range) {
    Task t;
    t.coords.thr_y = y;
    t.thresholds = thr_x;
    t.thr_y = y;
    tasks.push_back(std::move(t));
  }
  return evaluate(raw, std::move(settings), tasks, options);
}

SweepResult ct_sweep_s(const RawDataset& raw, const OutcomeSpec& outcome,
                       const std::vector<std::string>& conditions, double thr_y,
                       const std::string& sweep_var, std::vector<double> sweep_range,
                       double thr_x_default, const SweepOptions& options) {
  check_conditions(conditions);
  if (std::find(conditions.begin(), conditions.end(), sweep_var) == conditions.end()) {
    throw DataError("sweep variable '" + sweep_var + "' is not a condition");
  }
  if (!std::isfinite(thr_y) || !std::isfinite(thr_x_default)) {
    throw DataError("thresholds must be finite");
  }
  sort_unique(sweep_range, "sweep range");
  auto settings = base_settings(SweepKind::kSingleCondition, raw, outcome, conditions, options);
  settings.thr_y = thr_y;
  settings.sweep_var = sweep_var;
  settings.sweep_range = sweep_range;
  settings.thr_x_default = thr_x_default;

  std::vector<Task> tasks;
  for (double x : sweep_range) {
    Task t;
    t.coords.threshold = x;
    for (const auto& c : conditions) t.thresholds.set(c, c == sweep_var ? x : thr_x_default);
    t.thr_y = thr_y;
    tasks.push_back(std::move(t));
  }
  return evaluate(raw, std::move(settings), tasks, options);
}

SweepResult ct_sweep_m(const RawDataset& raw, const OutcomeSpec& outcome,
                       const std::vector<std::string>& conditions, double thr_y,
                       const std::vector<GridAxis>& sweep_list, const SweepOptions& options) {
  check_conditions(conditions);
  if (!std::isfinite(thr_y)) throw DataError("outcome threshold must be finite");
  auto grid = expand_grid(sweep_list);
  check_axes(conditions, sweep_list);
  auto settings = base_settings(SweepKind::kMultiCondition, raw, outcome, conditions, options);
  settings.thr_y = thr_y;
  settings.sweep_list = sweep_list;

  std::vector<Task> tasks;
  for (const auto& point : grid.points) {
    Task t;
    t.coords.combo_id = point.combo_id;
    t.coords.thr_x_label = point.label;
    t.thresholds = point.assignment;
    t.thr_y = thr_y;
    tasks.push_back(std::move(t));
  }
  return evaluate(raw, std::move(settings), tasks, options);
}

SweepResult dt_sweep(const RawDataset& raw, const OutcomeSpec& outcome,
                     const std::vector<std::string>& conditions,
                     const std::vector<GridAxis>& sweep_list_x,
                     std::vector<double> sweep_range_y, const SweepOptions& options) {
  check_conditions(conditions);
  auto grid = expand_grid(sweep_list_x);
  check_axes(conditions, sweep_list_x);
  sort_unique(sweep_range_y, "outcome sweep range");
  auto settings = base_settings(SweepKind::kDual, raw, outcome, conditions, options);
  settings.sweep_list = sweep_list_x;
  settings.sweep_range = sweep_range_y;

  std::vector<Task> tasks;
  for (const auto& point : grid.points) {
    for (double y : sweep_range_y) {
      Task t;
      t.coords.thr_y = y;
      t.coords.combo_id = point.combo_id;
      t.coords.thr_x_label = point.label;
      t.thresholds = point.assignment;
      t.thr_y = y;
      tasks.push_back(std::move(t));
    }
  }
  return evaluate(raw, std::move(settings), tasks, options);
}

SweepResult rerun(const RawDataset& raw, const SweepSettings& s, unsigned threads) {
  if (!s.dataset_digest.empty() && s.dataset_digest != raw.digest()) {
    throw DataError("dataset digest does not match the recorded settings");
  }
  auto options = s.options();
  options.threads = threads;
  switch (s.kind) {
    case SweepKind::kOutcome:
      return ot_sweep(raw, s.outcome, s.conditions, s.sweep_range, s.thr_x, options);
    case SweepKind::kSingleCondition:
      if (!s.thr_y || !s.sweep_var || !s.thr_x_default) {
        throw DataError("settings lack thrY, sweep_var or thrX_default");
      }
      return ct_sweep_s(raw, s.outcome, s.conditions, *s.thr_y, *s.sweep_var, s.sweep_range,
                        *s.thr_x_default, options);
    case SweepKind::kMultiCondition:
      if (!s.thr_y) throw DataError("settings lack thrY");
      return ct_sweep_m(raw, s.outcome, s.conditions, *s.thr_y, s.sweep_list, options);
    case SweepKind::kDual:
      return dt_sweep(raw, s.outcome, s.conditions, s.sweep_list, s.sweep_range, options);
  }
  throw InternalError("bad sweep kind");
}

}  // namespace qsweep
