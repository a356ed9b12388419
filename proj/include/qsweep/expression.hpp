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

// Solution expression grammar: "~" negation, "*" conjunction, " + "
// disjunction, e.g. "~X1*X3 + X1*X2". The constant-true term is "1" and an
// empty solution is "No solution".

#ifndef QSWEEP_EXPRESSION_HPP_
#define QSWEEP_EXPRESSION_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsweep/implicant.hpp"

namespace qsweep {

inline constexpr std::string_view kNoSolution = "No solution";

std::string render_term(const Implicant& term, const std::vector<std::string>& conditions);

// Terms are rendered in the order stored in the model.
std::string render_expression(const Model& model, const std::vector<std::string>& conditions);

// Inverse of render_expression. Throws DataError on unknown names, repeated
// conditions inside a term, or malformed text. "No solution" is rejected;
// callers check for it first.
Model parse_expression(std::string_view expression, const std::vector<std::string>& conditions);

struct ExpressionComplexity {
  std::size_t n_terms = 0;
  double mean_literals = 0.0;
};

// Term count and mean literals per term; nullopt for "No solution".
std::optional<ExpressionComplexity> expression_complexity(std::string_view expression);

}  // namespace qsweep

#endif  // QSWEEP_EXPRESSION_HPP_
