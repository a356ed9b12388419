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

#include "qsweep/expression.hpp"

#include <algorithm>

#include "qsweep/error.hpp"
#include "qsweep/format.hpp"

namespace qsweep {
namespace {

std::vector<std::string_view> split(std::string_view text, std::string_view sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + sep.size();
  }
}

}  // namespace

std::string render_term(const Implicant& term, const std::vector<std::string>& conditions) {
  if (term.width() != conditions.size()) {
    throw DataError("term width does not match the condition list");
  }
  std::string out;
  for (std::size_t i = 0; i < conditions.size(); ++i) {
    const Literal lit = term.literal(i);
    if (lit == Literal::kFree) continue;
    if (!out.empty()) out += '*';
    if (lit == Literal::kAbsent) out += '~';
    out += conditions[i];
  }
  return out.empty() ? "1" : out;
}

std::string render_expression(const Model& model, const std::vector<std::string>& conditions) {
  if (model.terms.empty()) return std::string(kNoSolution);
  std::string out;
  for (const auto& t : model.terms) {
    if (!out.empty()) out += " + ";
    out += render_term(t, conditions);
  }
  return out;
}

Model parse_expression(std::string_view expression, const std::vector<std::string>& conditions) {
  if (trim(expression).empty()) throw DataError("empty expression");
  if (trim(expression) == kNoSolution) throw DataError("'No solution' has no terms");
  const std::size_t k = conditions.size();
  Model model;
  for (const auto term_text : split(expression, " + ")) {
    if (term_text == "1") {
      model.terms.emplace_back(k, 0, 0);
      continue;
    }
    std::vector<Literal> lits(k, Literal::kFree);
    for (auto lit_text : split(term_text, "*")) {
      bool negated = false;
      if (lit_text.starts_with('~')) {
        negated = true;
        lit_text.remove_prefix(1);
      }
      const auto it = std::find(conditions.begin(), conditions.end(), lit_text);
      if (lit_text.empty() || it == conditions.end()) {
        throw DataError("unknown condition '" + std::string(lit_text) + "' in expression");
      }
      const auto idx = static_cast<std::size_t>(it - conditions.begin());
      if (lits[idx] != Literal::kFree) {
        throw DataError("condition '" + std::string(lit_text) + "' repeated in a term");
      }
      lits[idx] = negated ? Literal::kAbsent : Literal::kPresent;
    }
    model.terms.push_back(Implicant::from_literals(lits));
  }
  return model;
}

std::optional<ExpressionComplexity> expression_complexity(std::string_view expression) {
  if (trim(expression) == kNoSolution) return std::nullopt;
  ExpressionComplexity out;
  std::size_t literals = 0;
  for (const auto term_text : split(expression, " + ")) {
    ++out.n_terms;
    if (term_text != "1") literals += split(term_text, "*").size();
  }
  out.mean_literals = static_cast<double>(literals) / static_cast<double>(out.n_terms);
  return out;
}

}  // namespace qsweep
