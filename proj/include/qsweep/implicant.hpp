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

#ifndef QSWEEP_IMPLICANT_HPP_
#define QSWEEP_IMPLICANT_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qsweep {

// Declaration order is the canonical literal order used to sort terms.
enum class Literal : std::uint8_t { kPresent, kAbsent, kFree };

// A product term over k conditions, i.e. a subcube of {0,1}^k. Bit
// (k - 1 - i) of `care`/`value` belongs to condition i, matching truth table
// configuration codes.
class Implicant {
 public:
  Implicant() = default;
  Implicant(std::size_t width, std::uint32_t care, std::uint32_t value);

  static Implicant minterm(std::size_t width, std::uint32_t config);
  static Implicant from_literals(const std::vector<Literal>& literals);
  // "1-0": one of '1', '0', '-' per condition.
  static Implicant parse(std::string_view pattern);

  std::size_t width() const { return width_; }
  std::uint32_t care() const { return care_; }
  std::uint32_t value() const { return value_; }

  Literal literal(std::size_t condition) const;
  std::vector<Literal> literals() const;
  std::size_t literal_count() const;

  bool covers(std::uint32_t config) const { return (config & care_) == value_; }
  // Every configuration of `other` is a configuration of this term.
  bool contains(const Implicant& other) const;

  std::string pattern() const;

  friend bool operator==(const Implicant&, const Implicant&) = default;

 private:
  std::uint8_t width_ = 0;
  std::uint32_t care_ = 0;
  std::uint32_t value_ = 0;
};

// Fewer literals first, then lexicographic by literal vector.
std::strong_ordering canonical_compare(const Implicant& a, const Implicant& b);

struct CanonicalLess {
  bool operator()(const Implicant& a, const Implicant& b) const {
    return canonical_compare(a, b) < 0;
  }
};

// A disjunction of terms.
struct Model {
  std::vector<Implicant> terms;

  std::size_t literal_count() const;
  void canonicalize();
  bool covers(std::uint32_t config) const;

  friend bool operator==(const Model&, const Model&) = default;
};

// Lexicographic over canonical term lists.
bool model_less(const Model& a, const Model& b);

// Directional expectation for one condition.
enum class Expectation : std::uint8_t { kPresent, kAbsent, kNone };

// '1', '0', '-'
char expectation_code(Expectation e);

}  // namespace qsweep

#endif  // QSWEEP_IMPLICANT_HPP_
