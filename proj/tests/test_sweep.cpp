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
#include "qsweep/result_io.hpp"
#include "qsweep/sweep.hpp"

using namespace qsweep;

namespace {

RawDataset d1() {
  return RawDataset({"c1", "c2", "c3", "c4", "c5", "c6"},
                    {{"A", {3, 3, 1, 1, 3, 3}}, {"B", {3, 1, 2, 1, 3, 1}}, {"Y", {3, 2, 2, 1, 3, 2}}});
}

const std::vector<std::string> kAB = {"A", "B"};
const OutcomeSpec kY{"Y", false};

void check_row(const SummaryRow& r, const std::string& expr, std::optional<double> incl,
               std::optional<double> cov, std::size_t n) {
  CHECK(r.expression == expr);
  CHECK(r.incl_s == incl);
  CHECK(r.cov_s == cov);
  CHECK(r.n_solutions == n);
}

}  // namespace

TEST_CASE("ot_sweep on D1") {
  auto res = ot_sweep(d1(), kY, kAB, {3, 2}, {{"A", 2}, {"B", 2}});
  REQUIRE(res.summary.size() == 2);
  CHECK(res.summary[0].coords.thr_y == 2.0);
  check_row(res.summary[0], "A + B", 1.0, 1.0, 1);
  CHECK(res.summary[1].coords.thr_y == 3.0);
  check_row(res.summary[1], "A*B", 1.0, 1.0, 1);
  CHECK(res.stats.n_thresholds == 2);
  CHECK(res.stats.unique_solutions == 2);
  CHECK(res.stats.stability == 0.0);
  CHECK_FALSE(res.details.has_value());
  CHECK(res.settings.sweep_range == std::vector<double>{2, 3});
  CHECK(res.settings.n_cases == 6);
  CHECK(res.settings.dataset_digest == d1().digest());
}

TEST_CASE("ot_sweep with no positive configuration") {
  auto res = ot_sweep(d1(), kY, kAB, {4}, {{"A", 2}, {"B", 2}});
  REQUIRE(res.summary.size() == 1);
  check_row(res.summary[0], "No solution", std::nullopt, std::nullopt, 0);
  CHECK(res.stats.stability == 1.0);
}

TEST_CASE("ot_sweep single value") {
  auto res = ot_sweep(d1(), kY, kAB, {2}, {{"A", 2}, {"B", 2}});
  CHECK(res.summary.size() == 1);
  CHECK(res.stats.stability == 1.0);
}

TEST_CASE("ct_sweep_s on D1") {
  auto res = ct_sweep_s(d1(), kY, kAB, 2, "B", {2, 3}, 2);
  REQUIRE(res.summary.size() == 2);
  CHECK(res.summary[0].coords.threshold == 2.0);
  check_row(res.summary[0], "A + B", 1.0, 1.0, 1);
  CHECK(res.summary[1].coords.threshold == 3.0);
  check_row(res.summary[1], "A", 1.0, 0.8, 1);
  CHECK_THROWS_AS(ct_sweep_s(d1(), kY, kAB, 2, "Z", {2}, 2), DataError);
}

TEST_CASE("ct_sweep_s with one value equals a single pipeline run") {
  auto res = ct_sweep_s(d1(), kY, kAB, 2, "B", {3}, 2, {.return_details = true});
  auto point = run_pipeline(d1(), kY, kAB, {{"A", 2}, {"B", 3}}, 2, {});
  REQUIRE(res.details.has_value());
  CHECK(res.details->front().solution == point.solution);
  CHECK(res.details->front().fits == point.fits);
}

TEST_CASE("ct_sweep_m ordering and labels") {
  auto res = ct_sweep_m(d1(), kY, kAB, 2, {{"A", {2, 3}}, {"B", {2, 3}}});
  REQUIRE(res.summary.size() == 4);
  const char* labels[] = {"A=2, B=2", "A=3, B=2", "A=2, B=3", "A=3, B=3"};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(res.summary[i].coords.combo_id == i + 1);
    CHECK(res.summary[i].coords.thr_x_label == labels[i]);
  }
  auto single = ct_sweep_s(d1(), kY, kAB, 2, "B", {2}, 2);
  CHECK(res.summary[0].expression == single.summary[0].expression);
  CHECK(res.summary[0].incl_s == single.summary[0].incl_s);
  CHECK(res.summary[0].cov_s == single.summary[0].cov_s);
}

TEST_CASE("ct_sweep_m validation") {
  CHECK_THROWS_AS(ct_sweep_m(d1(), kY, kAB, 2, {{"A", {2}}}), DataError);
  CHECK_THROWS_AS(ct_sweep_m(d1(), kY, kAB, 2, {{"A", {2}}, {"B", {2}}, {"Z", {2}}}), DataError);
}

TEST_CASE("dt_sweep on D1") {
  auto res = dt_sweep(d1(), kY, kAB, {{"A", {2}}, {"B", {2}}}, {3, 2});
  REQUIRE(res.summary.size() == 2);
  CHECK(res.summary[0].coords.thr_y == 2.0);
  CHECK(res.summary[0].coords.combo_id == 1u);
  CHECK(res.summary[0].coords.thr_x_label == "A=2, B=2");
  check_row(res.summary[0], "A + B", 1.0, 1.0, 1);
  CHECK(res.summary[1].coords.thr_y == 3.0);
  check_row(res.summary[1], "A*B", 1.0, 1.0, 1);
}

TEST_CASE("dt_sweep orders thrY within each combo") {
  auto res = dt_sweep(d1(), kY, kAB, {{"A", {2, 3}}, {"B", {1, 2, 3}}}, {2, 3});
  REQUIRE(res.summary.size() == 2 * 6);
  for (std::size_t i = 0; i < res.summary.size(); ++i) {
    CHECK(res.summary[i].coords.combo_id == i / 2 + 1);
    CHECK(res.summary[i].coords.thr_y == (i % 2 == 0 ? 2.0 : 3.0));
  }
}

TEST_CASE("dir_exp needs remainders") {
  SweepOptions o;
  o.dir_exp = std::vector<Expectation>(2, Expectation::kPresent);
  CHECK_THROWS_AS(ot_sweep(d1(), kY, kAB, {2}, {{"A", 2}, {"B", 2}}, o), DataError);
  o.include_remainders = true;
  CHECK_NOTHROW(ot_sweep(d1(), kY, kAB, {2}, {{"A", 2}, {"B", 2}}, o));
  o.dir_exp->push_back(Expectation::kNone);
  CHECK_THROWS_AS(ot_sweep(d1(), kY, kAB, {2}, {{"A", 2}, {"B", 2}}, o), DataError);
}

TEST_CASE("property: the three sweep families agree at the same thresholds") {
  std::mt19937_64 rng(31);
  for (int rep = 0; rep < 40; ++rep) {
    auto d = oracle::random_data(rng, 3, 30);
    double a = 1 + rng() % 5, b = 1 + rng() % 5, c = 1 + rng() % 5, y = 1 + rng() % 5;
    SweepOptions o;
    o.include_remainders = rng() % 2;
    auto ot = ot_sweep(d.raw, kY, d.conditions, {y}, {{"X1", a}, {"X2", b}, {"X3", c}}, o);
    auto cm = ct_sweep_m(d.raw, kY, d.conditions, y, {{"X1", {a}}, {"X2", {b}}, {"X3", {c}}}, o);
    auto dt = dt_sweep(d.raw, kY, d.conditions, {{"X1", {a}}, {"X2", {b}}, {"X3", {c}}}, {y}, o);
    for (const auto* r : {&cm, &dt}) {
      CHECK(r->summary[0].expression == ot.summary[0].expression);
      CHECK(r->summary[0].incl_s == ot.summary[0].incl_s);
      CHECK(r->summary[0].cov_s == ot.summary[0].cov_s);
      CHECK(r->summary[0].n_solutions == ot.summary[0].n_solutions);
    }
  }
}

TEST_CASE("property: thread count does not change the result") {
  std::mt19937_64 rng(13);
  auto d = oracle::random_data(rng, 3, 50);
  std::vector<GridAxis> axes = {{"X1", {2, 3, 4}}, {"X2", {2, 3, 4}}, {"X3", {2, 3, 4}}};
  SweepOptions o;
  o.return_details = true;
  auto serial = dt_sweep(d.raw, kY, d.conditions, axes, {1, 2, 3, 4, 5}, o);
  for (unsigned t : {2u, 4u, 0u}) {
    o.threads = t;
    auto parallel = dt_sweep(d.raw, kY, d.conditions, axes, {1, 2, 3, 4, 5}, o);
    CHECK(parallel == serial);
    CHECK(to_json(parallel) == to_json(serial));
  }
}

TEST_CASE("rerun reproduces every sweep kind from its settings") {
  auto raw = d1();
  SweepOptions o;
  o.return_details = true;
  std::vector<SweepResult> results = {
      ot_sweep(raw, kY, kAB, {2, 3}, {{"A", 2}, {"B", 2}}, o),
      ct_sweep_s(raw, kY, kAB, 2, "B", {2, 3}, 2, o),
      ct_sweep_m(raw, kY, kAB, 2, {{"A", {2, 3}}, {"B", {2, 3}}}, o),
      dt_sweep(raw, OutcomeSpec{"Y", true}, kAB, {{"A", {2, 3}}, {"B", {2}}}, {2, 3}, o),
  };
  for (const auto& r : results) CHECK(rerun(raw, r.settings) == r);
  RawDataset other({"x"}, {{"A", {1}}, {"B", {1}}, {"Y", {1}}});
  CHECK_THROWS_AS(rerun(other, results[0].settings), DataError);
}

TEST_CASE("details carry the full pipeline state") {
  SweepOptions o;
  o.return_details = true;
  o.include_remainders = true;
  o.dir_exp = std::vector<Expectation>{Expectation::kPresent, Expectation::kPresent};
  auto res = ot_sweep(d1(), kY, kAB, {2, 3}, {{"A", 2}, {"B", 2}}, o);
  REQUIRE(res.details.has_value());
  REQUIRE(res.details->size() == 2);
  const auto& p = res.details->front();
  CHECK(p.coords == res.summary[0].coords);
  CHECK(p.truth_table.rows.size() == 4);
  CHECK(p.solution.type == SolutionType::kIntermediate);
  CHECK(p.fits.size() == p.solution.models.size());
  CHECK(p.necessity.size() == 4);
  CHECK(p.outcome_threshold == 2);
}
