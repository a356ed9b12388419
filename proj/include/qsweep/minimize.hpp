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

// Exact two-level minimization of truth tables.

#ifndef QSWEEP_MINIMIZE_HPP_
#define QSWEEP_MINIMIZE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qsweep/implicant.hpp"
#include "qsweep/truth_table.hpp"

namespace qsweep {

// Prime implicants of on ∪ dc that cover at least one `on` configuration,
// i.e. maximal subcubes of on ∪ dc that are useful for covering `on`.
// Computed by Quine-McCluskey merging. Returned in canonical term order.
std::vector<Implicant> find_prime_implicants(std::span<const std::uint32_t> on,
                                             std::span<const std::uint32_t> dc,
                                             std::size_t condition_count);

// Every cover of `on` by `prime_implicants` that is minimal first in term
// count and then in total literal count. Uses Petrick's product-of-sums
// expansion with absorption, pruned by a greedy upper bound. Empty result
// means `on` is empty or not coverable.
std::vector<Model> enumerate_minimal_covers(std::span<const Implicant> prime_implicants,
                                            std::span<const std::uint32_t> on);

enum class SolutionType { kConservative, kParsimonious, kIntermediate };

const char* solution_type_name(SolutionType type);

struct SolutionSet {
  SolutionType type = SolutionType::kConservative;
  std::vector<Model> models;     // empty means "No solution"
  std::vector<Implicant> epi;    // terms in every model
  std::vector<Implicant> spi;    // terms in some but not all models
  std::optional<std::vector<Expectation>> dir_exp;
  // Intermediate solutions only: the bounding solutions the model was
  // derived from (always from the first model of each).
  std::vector<Model> conservative_models;
  std::vector<Model> parsimonious_models;

  bool has_solution() const { return !models.empty(); }

  friend bool operator==(const SolutionSet&, const SolutionSet&) = default;
};

// include_remainders = false: conservative. true without dir_exp:
// parsimonious. true with dir_exp: intermediate.
SolutionSet minimize(const TruthTable& table, bool include_remainders,
                     const std::optional<std::vector<Expectation>>& dir_exp = std::nullopt);

// Builds the intermediate model from a conservative and a parsimonious model:
// each conservative term keeps the literals of every parsimonious term that
// contains it, plus those of its own literals that agree with the directional
// expectation.
Model derive_intermediate(const Model& conservative, const Model& parsimonious,
                          std::span<const Expectation> dir_exp);

struct TermPartition {
  std::vector<Implicant> epi;
  std::vector<Implicant> spi;
};

// Throws DataError on an empty model list.
TermPartition identify_epi_spi(const std::vector<Model>& models);

}  // namespace qsweep

#endif  // QSWEEP_MINIMIZE_HPP_
