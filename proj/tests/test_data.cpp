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

#include <filesystem>
#include <fstream>
#include <random>

#include "oracle.hpp"
#include "qsweep/data.hpp"
#include "qsweep/digest.hpp"
#include "qsweep/error.hpp"

using namespace qsweep;

namespace {

RawDataset d1() {
  return RawDataset({"c1", "c2", "c3", "c4", "c5", "c6"},
                    {{"A", {3, 3, 1, 1, 3, 3}}, {"B", {3, 1, 2, 1, 3, 1}}, {"Y", {3, 2, 2, 1, 3, 2}}});
}

std::vector<std::uint8_t> bits(std::initializer_list<int> v) {
  return std::vector<std::uint8_t>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("parse_csv with an id column") {
  auto raw = parse_csv("id,A,B,Y\nc1,3,3,3\nc4,1,1,1", std::string("id"));
  CHECK(raw.case_count() == 2);
  CHECK(raw.case_ids() == std::vector<std::string>{"c1", "c4"});
  REQUIRE(raw.columns().size() == 3);
  CHECK(raw.columns()[0].name == "A");
  CHECK(raw.columns()[2].name == "Y");
  CHECK(raw.column("B")[1] == 1.0);
}

TEST_CASE("parse_csv without an id column numbers the rows") {
  auto raw = parse_csv("A\n1\n2");
  CHECK(raw.case_ids() == std::vector<std::string>{"1", "2"});
}

TEST_CASE("parse_csv rejects bad input") {
  SUBCASE("non-numeric cell names row and column") {
    try {
      parse_csv("A,B\n1,x");
      FAIL("expected an error");
    } catch (const DataError& e) {
      std::string what = e.what();
      CHECK(what.find("row 1") != std::string::npos);
      CHECK(what.find("column B") != std::string::npos);
    }
  }
  CHECK_THROWS_AS(parse_csv("A,A\n1,2"), DataError);
  CHECK_THROWS_AS(parse_csv("A,B\n1,2\n3"), DataError);
  CHECK_THROWS_AS(parse_csv("id,A\nx,1\nx,2", std::string("id")), DataError);
  CHECK_THROWS_AS(parse_csv("A\n1", std::string("id")), DataError);
  CHECK_THROWS_AS(parse_csv("A\nnan"), DataError);
  CHECK_THROWS_AS(parse_csv("A\n"), DataError);
  CHECK_THROWS_AS(parse_csv("A\n\"1"), DataError);
}

TEST_CASE("parse_csv handles quoting, CRLF and a BOM") {
  auto raw = parse_csv("\xEF\xBB\xBFid,\"A\"\r\n\"c,1\",\" 2.5 \"\r\n\r\n", std::string("id"));
  CHECK(raw.case_ids() == std::vector<std::string>{"c,1"});
  CHECK(raw.column("A")[0] == 2.5);
}

TEST_CASE("load_csv reports a missing file as an I/O error") {
  CHECK_THROWS_AS(load_csv("/nonexistent/qsweep/data.csv"), IoError);
}

TEST_CASE("write_csv and parse_csv round-trip") {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 20; ++rep) {
    auto d = oracle::random_data(rng, 3, 10);
    auto text = write_csv(d.raw);
    auto back = parse_csv(text, std::string("id"));
    CHECK(back == d.raw);
    CHECK(back.digest() == d.raw.digest());
  }
  RawDataset fractional({"a b", "q\"x"}, {{"V", {0.1, -1e-7}}});
  CHECK(parse_csv(write_csv(fractional), std::string("id")) == fractional);
}

TEST_CASE("digest binds to canonical text") {
  auto a = parse_csv("id,A\nc1,1\n", std::string("id"));
  auto b = parse_csv("id,A  \r\nc1,1\r\n\r\n", std::string("id"));
  auto c = parse_csv("id,A\nc1,2\n", std::string("id"));
  CHECK(a.digest() == b.digest());
  CHECK(a.digest() != c.digest());
  CHECK(a.digest().size() == 64);
  CHECK(sha256_hex("abc") ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(canonicalize_text("x \r\ny\t\n\n\n") == "x\ny\n");
}

TEST_CASE("dichotomize uses the >= rule") {
  RawDataset raw({"1", "2", "3"}, {{"X", {5, 7, 9}}, {"Y", {5, 7, 9}}});
  auto bin = dichotomize(raw, {"X"}, {{"X", 7}}, OutcomeSpec::parse("Y"), 7);
  CHECK(bin.condition_memberships(0) == bits({0, 1, 1}));
  CHECK(bin.outcome_membership() == bits({0, 1, 1}));
  auto neg = dichotomize(raw, {"X"}, {{"X", 7}}, OutcomeSpec::parse("~Y"), 7);
  CHECK(neg.outcome_membership() == bits({1, 0, 0}));
  CHECK(neg.outcome_spec.negated);
  CHECK(neg.outcome_spec.label() == "~Y");
}

TEST_CASE("dichotomize D1") {
  auto bin = dichotomize(d1(), {"A", "B"}, {{"A", 2}, {"B", 2}}, OutcomeSpec::parse("Y"), 2);
  CHECK(bin.condition_memberships(0) == bits({1, 1, 0, 0, 1, 1}));
  CHECK(bin.condition_memberships(1) == bits({1, 0, 1, 0, 1, 0}));
  CHECK(bin.outcome_membership() == bits({1, 1, 1, 0, 1, 1}));
  CHECK(bin.case_ids == d1().case_ids());
  CHECK(bin.condition_thresholds.at("B") == 2);
  CHECK(bin.outcome_threshold == 2);
}

TEST_CASE("dichotomize validation") {
  auto raw = d1();
  auto y = OutcomeSpec::parse("Y");
  CHECK_THROWS_AS(dichotomize(raw, {"A", "Z"}, {{"A", 2}, {"Z", 2}}, y, 2), DataError);
  CHECK_THROWS_AS(dichotomize(raw, {"A", "B"}, {{"A", 2}}, y, 2), DataError);
  CHECK_THROWS_AS(dichotomize(raw, {"A", "Y"}, {{"A", 2}, {"Y", 2}}, y, 2), DataError);
  CHECK_THROWS_AS(dichotomize(raw, {"A"}, {{"A", 2}}, OutcomeSpec::parse("Q"), 2), DataError);
  CHECK_THROWS_AS(dichotomize(raw, {"A", "A"}, {{"A", 2}}, y, 2), DataError);
}

TEST_CASE("property: dichotomization is monotone and negation is a complement") {
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 50; ++rep) {
    auto d = oracle::random_data(rng, 2, 20);
    for (double t = 0; t <= 6; t += 0.5) {
      auto lo = dichotomize(d.raw, d.conditions, {{"X1", t}, {"X2", 3}}, OutcomeSpec::parse("Y"), t);
      auto hi = dichotomize(d.raw, d.conditions, {{"X1", t + 0.5}, {"X2", 3}},
                            OutcomeSpec::parse("Y"), t);
      auto neg = dichotomize(d.raw, d.conditions, {{"X1", t}, {"X2", 3}},
                             OutcomeSpec::parse("~Y"), t);
      auto a = lo.condition_memberships(0), b = hi.condition_memberships(0);
      auto y = lo.outcome_membership(), ny = neg.outcome_membership();
      for (std::size_t c = 0; c < a.size(); ++c) {
        CHECK(b[c] <= a[c]);
        CHECK(ny[c] == 1 - y[c]);
        CHECK(a[c] == (d.x[0][c] >= t ? 1 : 0));
      }
    }
  }
}

TEST_CASE("expand_grid puts the first axis fastest") {
  auto grid = expand_grid({{"X1", {6, 7}}, {"X2", {6, 7}}, {"X3", {6, 7}}});
  REQUIRE(grid.points.size() == 8);
  CHECK(grid.points[0].label == "X1=6, X2=6, X3=6");
  CHECK(grid.points[1].label == "X1=7, X2=6, X3=6");
  CHECK(grid.points[2].label == "X1=6, X2=7, X3=6");
  CHECK(grid.points[3].label == "X1=7, X2=7, X3=6");
  CHECK(grid.points[7].label == "X1=7, X2=7, X3=7");
  for (std::size_t i = 0; i < 8; ++i) CHECK(grid.points[i].combo_id == i + 1);

  auto one = expand_grid({{"A", {2}}});
  REQUIRE(one.points.size() == 1);
  CHECK(one.points[0].combo_id == 1);

  auto ab = expand_grid({{"A", {2, 3}}, {"B", {2, 3}}});
  REQUIRE(ab.points.size() == 4);
  CHECK(ab.points[2].assignment.at("A") == 2);
  CHECK(ab.points[2].assignment.at("B") == 3);

  CHECK_THROWS_AS(expand_grid({}), DataError);
  CHECK_THROWS_AS(expand_grid({{"A", {1}}, {"A", {2}}}), DataError);
  CHECK_THROWS_AS(expand_grid({{"A", {}}}), DataError);
}

TEST_CASE("property: grid size and label round-trip") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> len(1, 4);
  for (int rep = 0; rep < 30; ++rep) {
    std::vector<GridAxis> axes;
    std::size_t product = 1;
    int naxes = len(rng);
    for (int a = 0; a < naxes; ++a) {
      GridAxis axis{"V" + std::to_string(a), {}};
      int m = len(rng);
      for (int i = 0; i < m; ++i) axis.thresholds.push_back(i * 0.25 + a);
      product *= axis.thresholds.size();
      axes.push_back(axis);
    }
    auto grid = expand_grid(axes);
    CHECK(grid.points.size() == product);
    for (const auto& p : grid.points) {
      CHECK(ThresholdAssignment::parse_label(p.label) == p.assignment);
    }
  }
}

TEST_CASE("OutcomeSpec and ThresholdAssignment") {
  auto y = OutcomeSpec::parse(" ~Y ");
  CHECK(y.name == "Y");
  CHECK(y.negated);
  CHECK_THROWS_AS(OutcomeSpec::parse("~"), DataError);
  ThresholdAssignment a;
  a.set("X1", 6);
  a.set("X2", 7.5);
  a.set("X1", 7);
  CHECK(a.label() == "X1=7, X2=7.5");
  CHECK(ThresholdAssignment::parse_label("X1=7, X2=7.5") == a);
  CHECK_THROWS_AS(a.at("X3"), DataError);
  CHECK_THROWS_AS(ThresholdAssignment::parse_label("X1"), DataError);
}
