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

#include "qsweep/result_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qsweep/error.hpp"
#include "qsweep/expression.hpp"

namespace qsweep {

namespace {

using Json = nlohmann::ordered_json;

Json opt(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

std::optional<double> get_opt(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

Json assignment_json(const ThresholdAssignment& a) {
  Json j = Json::object();
  for (const auto& [name, value] : a.entries()) j[name] = value;
  return j;
}

ThresholdAssignment assignment_from(const Json& j) {
  ThresholdAssignment a;
  for (const auto& [name, value] : j.items()) a.set(name, value.get<double>());
  return a;
}

Json expectations_json(const std::optional<std::vector<Expectation>>& e) {
  if (!e) return nullptr;
  Json j = Json::array();
  for (auto x : *e) j.push_back(std::string(1, expectation_code(x)));
  return j;
}

std::optional<std::vector<Expectation>> expectations_from(const Json& j) {
  if (j.is_null()) return std::nullopt;
  std::vector<Expectation> out;
  for (const auto& x : j) {
    auto s = x.get<std::string>();
    if (s == "1") out.push_back(Expectation::kPresent);
    else if (s == "0") out.push_back(Expectation::kAbsent);
    else if (s == "-") out.push_back(Expectation::kNone);
    else throw DataError("bad directional expectation '" + s + "'");
  }
  return out;
}

Json terms_json(const std::vector<Implicant>& terms) {
  Json j = Json::array();
  for (const auto& t : terms) j.push_back(t.pattern());
  return j;
}

std::vector<Implicant> terms_from(const Json& j) {
  std::vector<Implicant> out;
  for (const auto& t : j) out.push_back(Implicant::parse(t.get<std::string>()));
  return out;
}

Json models_json(const std::vector<Model>& models) {
  Json j = Json::array();
  for (const auto& m : models) j.push_back(terms_json(m.terms));
  return j;
}

std::vector<Model> models_from(const Json& j) {
  std::vector<Model> out;
  for (const auto& m : j) out.push_back(Model{terms_from(m)});
  return out;
}

Json settings_json(const SweepSettings& s) {
  Json j;
  j["kind"] = sweep_kind_name(s.kind);
  j["outcome"] = s.outcome.label();
  j["conditions"] = s.conditions;
  j["thrY"] = opt(s.thr_y);
  j["thrX"] = assignment_json(s.thr_x);
  j["thrX_default"] = opt(s.thr_x_default);
  j["sweep_var"] = s.sweep_var ? Json(*s.sweep_var) : Json(nullptr);
  j["sweep_range"] = s.sweep_range;
  Json axes = Json::array();
  for (const auto& a : s.sweep_list) axes.push_back({{"name", a.name}, {"thresholds", a.thresholds}});
  j["sweep_list"] = axes;
  j["incl_cut"] = s.incl_cut;
  j["n_cut"] = s.n_cut;
  j["include"] = s.include_remainders ? "remainders" : "none";
  j["dir_exp"] = expectations_json(s.dir_exp);
  j["return_details"] = s.return_details;
  j["dataset_digest"] = s.dataset_digest;
  j["n_cases"] = s.n_cases;
  j["version"] = s.version;
  return j;
}

SweepSettings settings_from(const Json& j) {
  SweepSettings s;
  auto kind = parse_sweep_kind(j.at("kind").get<std::string>());
  if (!kind) throw DataError("unknown sweep kind in result file");
  s.kind = *kind;
  s.outcome = OutcomeSpec::parse(j.at("outcome").get<std::string>());
  s.conditions = j.at("conditions").get<std::vector<std::string>>();
  s.thr_y = get_opt(j.at("thrY"));
  s.thr_x = assignment_from(j.at("thrX"));
  s.thr_x_default = get_opt(j.at("thrX_default"));
  if (!j.at("sweep_var").is_null()) s.sweep_var = j.at("sweep_var").get<std::string>();
  s.sweep_range = j.at("sweep_range").get<std::vector<double>>();
  for (const auto& a : j.at("sweep_list")) {
    s.sweep_list.push_back({a.at("name").get<std::string>(),
                            a.at("thresholds").get<std::vector<double>>()});
  }
  s.incl_cut = j.at("incl_cut").get<double>();
  s.n_cut = j.at("n_cut").get<std::size_t>();
  auto include = j.at("include").get<std::string>();
  if (include != "none" && include != "remainders") {
    throw DataError("bad include value '" + include + "' in result file");
  }
  s.include_remainders = include == "remainders";
  s.dir_exp = expectations_from(j.at("dir_exp"));
  s.return_details = j.at("return_details").get<bool>();
  s.dataset_digest = j.at("dataset_digest").get<std::string>();
  s.n_cases = j.at("n_cases").get<std::size_t>();
  s.version = j.at("version").get<std::string>();
  return s;
}

void put_coords(Json& j, const Coordinates& c, SweepKind kind) {
  switch (kind) {
    case SweepKind::kOutcome:
      j["thrY"] = opt(c.thr_y);
      break;
    case SweepKind::kSingleCondition:
      j["threshold"] = opt(c.threshold);
      break;
    case SweepKind::kMultiCondition:
      j["threshold"] = c.thr_x_label.value_or("");
      j["combo_id"] = c.combo_id.value_or(0);
      break;
    case SweepKind::kDual:
      j["thrY"] = opt(c.thr_y);
      j["combo_id"] = c.combo_id.value_or(0);
      j["thrX"] = c.thr_x_label.value_or("");
      break;
  }
}

Coordinates coords_from(const Json& j) {
  Coordinates c;
  if (j.contains("thrY")) c.thr_y = get_opt(j["thrY"]);
  if (j.contains("threshold")) {
    if (j["threshold"].is_string()) c.thr_x_label = j["threshold"].get<std::string>();
    else c.threshold = get_opt(j["threshold"]);
  }
  if (j.contains("combo_id")) c.combo_id = j["combo_id"].get<std::size_t>();
  if (j.contains("thrX")) c.thr_x_label = j["thrX"].get<std::string>();
  return c;
}

Json truth_table_json(const TruthTable& tt) {
  Json j;
  j["conditions"] = tt.conditions;
  j["outcome"] = tt.outcome.label();
  j["incl_cut"] = tt.incl_cut;
  j["n_cut"] = tt.n_cut;
  Json rows = Json::array();
  for (const auto& r : tt.rows) {
    Json row;
    row["config"] = tt.config_bits(r.config);
    row["n"] = r.n;
    row["n_outcome"] = r.n_outcome;
    row["incl"] = opt(r.incl);
    row["out"] = std::string(1, outcome_code(r.out));
    row["cases"] = r.cases;
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

TruthTable truth_table_from(const Json& j) {
  TruthTable tt;
  tt.conditions = j.at("conditions").get<std::vector<std::string>>();
  tt.outcome = OutcomeSpec::parse(j.at("outcome").get<std::string>());
  tt.incl_cut = j.at("incl_cut").get<double>();
  tt.n_cut = j.at("n_cut").get<std::size_t>();
  for (const auto& row : j.at("rows")) {
    TruthTableRow r;
    auto bits = row.at("config").get<std::string>();
    if (bits.size() != tt.conditions.size()) throw DataError("bad truth table configuration");
    for (char b : bits) {
      if (b != '0' && b != '1') throw DataError("bad truth table configuration");
      r.config = (r.config << 1) | static_cast<std::uint32_t>(b - '0');
    }
    r.n = row.at("n").get<std::size_t>();
    r.n_outcome = row.at("n_outcome").get<std::size_t>();
    r.incl = get_opt(row.at("incl"));
    auto out = row.at("out").get<std::string>();
    if (out == "1") r.out = RowOutcome::kPositive;
    else if (out == "0") r.out = RowOutcome::kNegative;
    else if (out == "?") r.out = RowOutcome::kRemainder;
    else throw DataError("bad truth table outcome '" + out + "'");
    r.cases = row.at("cases").get<std::vector<std::string>>();
    tt.rows.push_back(std::move(r));
  }
  return tt;
}

Json solution_json(const SolutionSet& s, const std::vector<std::string>& conditions) {
  Json j;
  j["type"] = solution_type_name(s.type);
  Json expressions = Json::array();
  for (const auto& m : s.models) expressions.push_back(render_expression(m, conditions));
  j["expressions"] = std::move(expressions);
  j["models"] = models_json(s.models);
  j["epi"] = terms_json(s.epi);
  j["spi"] = terms_json(s.spi);
  j["dir_exp"] = expectations_json(s.dir_exp);
  j["conservative_models"] = models_json(s.conservative_models);
  j["parsimonious_models"] = models_json(s.parsimonious_models);
  return j;
}

SolutionSet solution_from(const Json& j) {
  SolutionSet s;
  auto type = j.at("type").get<std::string>();
  bool found = false;
  for (auto t : {SolutionType::kConservative, SolutionType::kParsimonious,
                 SolutionType::kIntermediate}) {
    if (type == solution_type_name(t)) {
      s.type = t;
      found = true;
    }
  }
  if (!found) throw DataError("bad solution type '" + type + "'");
  s.models = models_from(j.at("models"));
  s.epi = terms_from(j.at("epi"));
  s.spi = terms_from(j.at("spi"));
  s.dir_exp = expectations_from(j.at("dir_exp"));
  s.conservative_models = models_from(j.at("conservative_models"));
  s.parsimonious_models = models_from(j.at("parsimonious_models"));
  return s;
}

Json fit_json(const FitStats& f) {
  Json j;
  j["inclS"] = opt(f.incl_s);
  j["covS"] = opt(f.cov_s);
  Json terms = Json::array();
  for (const auto& t : f.per_term) {
    terms.push_back({{"incl", opt(t.incl)}, {"cov", opt(t.cov)}, {"covU", opt(t.cov_unique)}});
  }
  j["terms"] = std::move(terms);
  return j;
}

FitStats fit_from(const Json& j) {
  FitStats f;
  f.incl_s = get_opt(j.at("inclS"));
  f.cov_s = get_opt(j.at("covS"));
  for (const auto& t : j.at("terms")) {
    f.per_term.push_back({get_opt(t.at("incl")), get_opt(t.at("cov")), get_opt(t.at("covU"))});
  }
  return f;
}

Json detail_json(const PointDetail& p, SweepKind kind) {
  Json j;
  Json coords = Json::object();
  put_coords(coords, p.coords, kind);
  j["coordinates"] = std::move(coords);
  j["condition_thresholds"] = assignment_json(p.condition_thresholds);
  j["outcome_threshold"] = p.outcome_threshold;
  j["truth_table"] = truth_table_json(p.truth_table);
  j["solution"] = solution_json(p.solution, p.truth_table.conditions);
  Json fits = Json::array();
  for (const auto& f : p.fits) fits.push_back(fit_json(f));
  j["fits"] = std::move(fits);
  Json nec = Json::array();
  for (const auto& n : p.necessity) {
    nec.push_back({{"condition", n.condition}, {"inclN", opt(n.incl_n)}, {"covN", opt(n.cov_n)}});
  }
  j["necessity"] = std::move(nec);
  return j;
}

PointDetail detail_from(const Json& j) {
  PointDetail p;
  p.coords = coords_from(j.at("coordinates"));
  p.condition_thresholds = assignment_from(j.at("condition_thresholds"));
  p.outcome_threshold = j.at("outcome_threshold").get<double>();
  p.truth_table = truth_table_from(j.at("truth_table"));
  p.solution = solution_from(j.at("solution"));
  for (const auto& f : j.at("fits")) p.fits.push_back(fit_from(f));
  for (const auto& n : j.at("necessity")) {
    p.necessity.push_back(
        {n.at("condition").get<std::string>(), get_opt(n.at("inclN")), get_opt(n.at("covN"))});
  }
  return p;
}

Json range_json(const std::optional<std::pair<double, double>>& r) {
  if (!r) return nullptr;
  return Json::array({r->first, r->second});
}

std::optional<std::pair<double, double>> range_from(const Json& j) {
  if (j.is_null()) return std::nullopt;
  if (!j.is_array() || j.size() != 2) throw DataError("bad range in result file");
  return std::make_pair(j[0].get<double>(), j[1].get<double>());
}

}  // namespace

std::string to_json(const SweepResult& result) {
  Json j;
  j["settings"] = settings_json(result.settings);
  Json summary = Json::array();
  for (const auto& row : result.summary) {
    Json r = Json::object();
    put_coords(r, row.coords, result.settings.kind);
    r["expression"] = row.expression;
    r["inclS"] = opt(row.incl_s);
    r["covS"] = opt(row.cov_s);
    r["n_solutions"] = row.n_solutions;
    summary.push_back(std::move(r));
  }
  j["summary"] = std::move(summary);
  const auto& st = result.stats;
  j["stats"] = {{"n_thresholds", st.n_thresholds},
                {"unique_solutions", st.unique_solutions},
                {"stability", st.stability},
                {"incl_range", range_json(st.incl_range)},
                {"cov_range", range_json(st.cov_range)}};
  if (result.details) {
    Json details = Json::array();
    for (const auto& p : *result.details) details.push_back(detail_json(p, result.settings.kind));
    j["details"] = std::move(details);
  }
  return j.dump(2) + "\n";
}

SweepResult from_json(std::string_view text) {
  try {
    Json j = Json::parse(text);
    SweepResult result;
    result.settings = settings_from(j.at("settings"));
    for (const auto& r : j.at("summary")) {
      SummaryRow row;
      row.coords = coords_from(r);
      row.expression = r.at("expression").get<std::string>();
      row.incl_s = get_opt(r.at("inclS"));
      row.cov_s = get_opt(r.at("covS"));
      row.n_solutions = r.at("n_solutions").get<std::size_t>();
      result.summary.push_back(std::move(row));
    }
    const auto& st = j.at("stats");
    result.stats.n_thresholds = st.at("n_thresholds").get<std::size_t>();
    result.stats.unique_solutions = st.at("unique_solutions").get<std::size_t>();
    result.stats.stability = st.at("stability").get<double>();
    result.stats.incl_range = range_from(st.at("incl_range"));
    result.stats.cov_range = range_from(st.at("cov_range"));
    if (j.contains("details")) {
      std::vector<PointDetail> details;
      for (const auto& p : j["details"]) details.push_back(detail_from(p));
      result.details = std::move(details);
    }
    return result;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed result file: ") + e.what());
  }
}

void export_result(const SweepResult& result, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << to_json(result);
  if (!out.flush()) throw IoError("cannot write '" + path.string() + "'");
}

SweepResult import_result(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json(buf.str());
}

}  // namespace qsweep
