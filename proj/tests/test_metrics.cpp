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

#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "qsweep/error.hpp"
#include "qsweep/expression.hpp"
#include "qsweep/metrics.hpp"
#include "qsweep/minimize.hpp"
#include "qsweep/truth_table.hpp"

using namespace qsweep;

namespace {

RawDataset d1() {
  return RawDataset({"c1", "c2", "c3", "c4", "c5", "c6"},
                    {{"A", {3, 3, 1, 1, 3, 3}}, {"B", {3, 1, 2, 1, 3, 1}}, {"Y", {3, 2, 2, 1, 3, 2}}});
}

BinaryDataset d1_at(double thr_y) {
  return dichotomize(d1(), {"A", "B"}, {{"A", 2}, {"B", 2}}, OutcomeSpec::parse("Y"), thr_y);
}

Model model(std::initializer_list<const char*> patterns) {
  Model m;
  for (const char* p : patterns) m.terms.push_back(Implicant::parse(p));
  return m;
}

}  // namespace

TEST_CASE("solution_fit on D1") {
  auto fit = solution_fit(model({"1-", "-1"}), d1_at(2));
  CHECK(fit.incl_s == 1.0);
  CHECK(fit.cov_s == 1.0);
  REQUIRE(fit.per_term.size() == 2);
  CHECK(fit.per_term[0].cov == 0.8);
  CHECK(fit.per_term[1].cov == 0.6);
  CHECK(*fit.per_term[0].cov_unique == doctest::Approx(0.4));
  CHECK(*fit.per_term[1].cov_unique == doctest::Approx(0.2));

  auto fit3 = solution_fit(model({"11"}), d1_at(3));
  CHECK(fit3.incl_s == 1.0);
  CHECK(fit3.cov_s == 1.0);
}

TEST_CASE("a term covering no case has undefined consistency") {
  RawDataset raw({"1", "2"}, {{"A", {0, 0}}, {"Y", {1, 0}}});
  auto bin = dichotomize(raw, {"A"}, {{"A", 1}}, OutcomeSpec::parse("Y"), 1);
  auto fit = solution_fit(model({"1"}), bin);
  CHECK_FALSE(fit.incl_s.has_value());
  CHECK(fit.cov_s == 0.0);
  CHECK_THROWS_AS(solution_fit(Model{}, bin), DataError);
}

TEST_CASE("necessity on D1") {
  auto rows = necessity(d1_at(2));
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].condition == "A");
  CHECK(rows[0].incl_n == 0.8);
  CHECK(rows[0].cov_n == 1.0);
  CHECK(rows[1].condition == "~A");
  CHECK(rows[2].condition == "B");
  CHECK(rows[2].incl_n == 0.6);
  CHECK(rows[2].cov_n == 1.0);
  CHECK(rows[3].condition == "~B");
}

TEST_CASE("necessity of an all-zero condition") {
  RawDataset raw({"1", "2"}, {{"A", {0, 0}}, {"Y", {1, 0}}});
  auto rows = necessity(dichotomize(raw, {"A"}, {{"A", 1}}, OutcomeSpec::parse("Y"), 1));
  CHECK(rows[0].incl_n == 0.0);
  CHECK_FALSE(rows[0].cov_n.has_value());
}

TEST_CASE("sweep_stats") {
  auto s = sweep_stats({{"E1", 0.9, 0.8}, {"E1", 0.95, 0.7}, {"No solution", {}, {}}});
  CHECK(s.n_thresholds == 3);
  CHECK(s.unique_solutions == 2);
  CHECK(s.stability == 0.5);
  REQUIRE(s.incl_range.has_value());
  CHECK(s.incl_range->first == 0.9);
  CHECK(s.incl_range->second == 0.95);
  CHECK(s.cov_range->first == 0.7);
  CHECK(sweep_stats({{"E1", 1, 1}, {"E1", 1, 1}, {"E1", 1, 1}}).stability == 1.0);
  CHECK(sweep_stats({{"E1", 1, 1}}).stability == 1.0);
  CHECK_FALSE(sweep_stats({{"No solution", {}, {}}}).incl_range.has_value());
  CHECK_THROWS_AS(sweep_stats({}), DataError);
}

TEST_CASE("property: stability lies in [0, 1] and is 1 iff all expressions agree") {
  std::mt19937_64 rng(8);
  for (int rep = 0; rep < 200; ++rep) {
    std::size_t n = 2 + rng() % 8;
    std::vector<FitPoint> rows;
    std::set<std::string> distinct;
    for (std::size_t i = 0; i < n; ++i) {
      std::string e = "E" + std::to_string(rng() % 3);
      distinct.insert(e);
      rows.push_back({e, 1.0, 1.0});
    }
    auto s = sweep_stats(rows);
    CHECK(s.stability >= 0.0);
    CHECK(s.stability <= 1.0);
    CHECK((s.stability == 1.0) == (distinct.size() == 1));
  }
}

TEST_CASE("property: fits equal per-case counts") {
  std::mt19937_64 rng(99);
  for (int rep = 0; rep < 300; ++rep) {
    std::size_t k = 1 + rng() % 5, n = 1 + rng() % 60;
    auto d = oracle::random_data(rng, k, n);
    ThresholdAssignment thr;
    std::vector<double> t(k);
    for (std::size_t i = 0; i < k; ++i) {
      t[i] = 1 + static_cast<double>(rng() % 5);
      thr.set(d.conditions[i], t[i]);
    }
    double thr_y = 1 + static_cast<double>(rng() % 5);
    bool neg = rng() % 2;
    auto bin = dichotomize(d.raw, d.conditions, thr, OutcomeSpec{"Y", neg}, thr_y);
    Model m;
    std::size_t nterms = 1 + rng() % 3;
    for (std::size_t j = 0; j < nterms; ++j) {
      std::vector<Literal> lits(k);
      for (auto& l : lits) l = static_cast<Literal>(rng() % 3);
      m.terms.push_back(Implicant::from_literals(lits));
    }
    auto fit = solution_fit(m, bin);
    auto want = oracle::case_fit(d.x, t, d.y, thr_y, neg, m);
    CHECK(oracle::close(fit.incl_s, want.incl_s));
    CHECK(oracle::close(fit.cov_s, want.cov_s));
    double sum_u = 0, sum_cov = 0;
    for (std::size_t j = 0; j < nterms; ++j) {
      CHECK(oracle::close(fit.per_term[j].incl, want.incl[j]));
      CHECK(oracle::close(fit.per_term[j].cov, want.cov[j]));
      CHECK(oracle::close(fit.per_term[j].cov_unique, want.cov_u[j]));
      if (fit.per_term[j].cov) {
        CHECK(*fit.per_term[j].cov_unique <= *fit.per_term[j].cov);
        sum_u += *fit.per_term[j].cov_unique;
        sum_cov += *fit.per_term[j].cov;
      }
    }
    if (fit.cov_s) {
      CHECK(sum_u <= *fit.cov_s + 1e-12);
      CHECK(*fit.cov_s <= sum_cov + 1e-12);
      // Dropping a term never raises coverage.
      if (nterms > 1) {
        Model less = m;
        less.terms.pop_back();
        CHECK(*solution_fit(less, bin).cov_s <= *fit.cov_s);
      }
    }
    auto nec = necessity(bin);
    REQUIRE(nec.size() == 2 * k);
    for (std::size_t r = 0; r < nec.size(); ++r) {
      CHECK(oracle::close(nec[r].incl_n, want.incl_n[r]));
      CHECK(oracle::close(nec[r].cov_n, want.cov_n[r]));
    }
  }
}
