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

#include "qsweep/metrics.hpp"

#include <algorithm>
#include <set>

#include "qsweep/error.hpp"

namespace qsweep {
namespace {

std::optional<double> ratio(std::size_t num, std::size_t den) {
  if (den == 0) return std::nullopt;
  return static_cast<double>(num) / static_cast<double>(den);
}

void widen(std::optional<std::pair<double, double>>& range, std::optional<double> v) {
  if (!v) return;
  if (!range) {
    range.emplace(*v, *v);
  } else {
    range->first = std::min(range->first, *v);
    range->second = std::max(range->second, *v);
  }
}

}  // namespace

CaseSet term_cases(const Implicant& term, const BinaryDataset& data) {
  if (term.width() != data.conditions.size()) {
    throw DataError("term has " + std::to_string(term.width()) + " literals for " +
                    std::to_string(data.conditions.size()) + " conditions");
  }
  CaseSet cases = CaseSet::all(data.case_count());
  for (std::size_t i = 0; i < term.width(); ++i) {
    switch (term.literal(i)) {
      case Literal::kPresent:
        cases &= data.condition_sets[i];
        break;
      case Literal::kAbsent:
        cases.subtract(data.condition_sets[i]);
        break;
      case Literal::kFree:
        break;
    }
  }
  return cases;
}

FitStats solution_fit(const Model& model, const BinaryDataset& data) {
  if (model.terms.empty()) throw DataError("cannot compute fit of an empty model");
  if (data.case_count() == 0) throw DataError("cannot compute fit without cases");
  const std::size_t n_y = data.outcome.count();

  std::vector<CaseSet> covered;
  covered.reserve(model.terms.size());
  for (const auto& t : model.terms) covered.push_back(term_cases(t, data));

  CaseSet solution(data.case_count());
  for (const auto& c : covered) solution |= c;

  FitStats fit;
  const std::size_t hits = solution.count_and(data.outcome);
  fit.incl_s = ratio(hits, solution.count());
  fit.cov_s = ratio(hits, n_y);
  for (std::size_t t = 0; t < covered.size(); ++t) {
    CaseSet only = covered[t];
    for (std::size_t o = 0; o < covered.size(); ++o) {
      if (o != t) only.subtract(covered[o]);
    }
    const std::size_t term_hits = covered[t].count_and(data.outcome);
    fit.per_term.push_back({ratio(term_hits, covered[t].count()), ratio(term_hits, n_y),
                            ratio(only.count_and(data.outcome), n_y)});
  }
  return fit;
}

std::vector<NecessityRow> necessity(const BinaryDataset& data) {
  if (data.case_count() == 0) throw DataError("cannot compute necessity without cases");
  const std::size_t n_y = data.outcome.count();
  std::vector<NecessityRow> rows;
  rows.reserve(2 * data.conditions.size());
  for (std::size_t i = 0; i < data.conditions.size(); ++i) {
    const CaseSet& present = data.condition_sets[i];
    const CaseSet absent = present.complement();
    for (const auto* set : {&present, &absent}) {
      const std::size_t both = set->count_and(data.outcome);
      rows.push_back({(set == &present ? "" : "~") + data.conditions[i], ratio(both, n_y),
                      ratio(both, set->count())});
    }
  }
  return rows;
}

SweepStats sweep_stats(const std::vector<FitPoint>& rows) {
  if (rows.empty()) throw DataError("sweep statistics need at least one row");
  SweepStats stats;
  stats.n_thresholds = rows.size();
  std::set<std::string> distinct;
  for (const auto& r : rows) {
    distinct.insert(r.expression);
    widen(stats.incl_range, r.incl_s);
    widen(stats.cov_range, r.cov_s);
  }
  stats.unique_solutions = distinct.size();
  if (stats.n_thresholds > 1) {
    stats.stability = 1.0 - static_cast<double>(stats.unique_solutions - 1) /
                                static_cast<double>(stats.n_thresholds - 1);
  }
  return stats;
}

}  // namespace qsweep
