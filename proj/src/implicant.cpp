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

#include "qsweep/implicant.hpp"

#include <algorithm>
#include <bit>

#include "qsweep/error.hpp"

namespace qsweep {

Implicant::Implicant(std::size_t width, std::uint32_t care, std::uint32_t value)
    : width_(static_cast<std::uint8_t>(width)), care_(care), value_(value & care) {
  if (width > 32) throw DataError("implicant wider than 32 conditions");
  const std::uint32_t full = width == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << width) - 1;
  if ((care & ~full) != 0) throw DataError("implicant care mask exceeds its width");
}

Implicant Implicant::minterm(std::size_t width, std::uint32_t config) {
  const std::uint32_t full = (std::uint32_t{1} << width) - 1;
  return Implicant(width, full, config & full);
}

Implicant Implicant::from_literals(const std::vector<Literal>& literals) {
  const std::size_t k = literals.size();
  std::uint32_t care = 0;
  std::uint32_t value = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const std::uint32_t bit = std::uint32_t{1} << (k - 1 - i);
    if (literals[i] == Literal::kPresent) {
      care |= bit;
      value |= bit;
    } else if (literals[i] == Literal::kAbsent) {
      care |= bit;
    }
  }
  return Implicant(k, care, value);
}

Implicant Implicant::parse(std::string_view pattern) {
  std::vector<Literal> lits;
  for (char c : pattern) {
    switch (c) {
      case '1':
        lits.push_back(Literal::kPresent);
        break;
      case '0':
        lits.push_back(Literal::kAbsent);
        break;
      case '-':
        lits.push_back(Literal::kFree);
        break;
      default:
        throw DataError("bad implicant pattern '" + std::string(pattern) + "'");
    }
  }
  return from_literals(lits);
}

Literal Implicant::literal(std::size_t condition) const {
  const std::uint32_t bit = std::uint32_t{1} << (width_ - 1 - condition);
  if ((care_ & bit) == 0) return Literal::kFree;
  return (value_ & bit) != 0 ? Literal::kPresent : Literal::kAbsent;
}

std::vector<Literal> Implicant::literals() const {
  std::vector<Literal> out(width_);
  for (std::size_t i = 0; i < width_; ++i) out[i] = literal(i);
  return out;
}

std::size_t Implicant::literal_count() const {
  return static_cast<std::size_t>(std::popcount(care_));
}

bool Implicant::contains(const Implicant& other) const {
  return (care_ & ~other.care_) == 0 && (other.value_ & care_) == value_;
}

std::string Implicant::pattern() const {
  std::string out(width_, '-');
  for (std::size_t i = 0; i < width_; ++i) {
    switch (literal(i)) {
      case Literal::kPresent:
        out[i] = '1';
        break;
      case Literal::kAbsent:
        out[i] = '0';
        break;
      case Literal::kFree:
        break;
    }
  }
  return out;
}

std::strong_ordering canonical_compare(const Implicant& a, const Implicant& b) {
  if (auto c = a.literal_count() <=> b.literal_count(); c != 0) return c;
  const std::size_t k = std::min(a.width(), b.width());
  for (std::size_t i = 0; i < k; ++i) {
    if (auto c = a.literal(i) <=> b.literal(i); c != 0) return c;
  }
  return a.width() <=> b.width();
}

std::size_t Model::literal_count() const {
  std::size_t total = 0;
  for (const auto& t : terms) total += t.literal_count();
  return total;
}

void Model::canonicalize() {
  std::sort(terms.begin(), terms.end(), CanonicalLess{});
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
}

bool Model::covers(std::uint32_t config) const {
  return std::any_of(terms.begin(), terms.end(),
                     [&](const Implicant& t) { return t.covers(config); });
}

bool model_less(const Model& a, const Model& b) {
  return std::lexicographical_compare(
      a.terms.begin(), a.terms.end(), b.terms.begin(), b.terms.end(),
      [](const Implicant& x, const Implicant& y) { return canonical_compare(x, y) < 0; });
}

char expectation_code(Expectation e) {
  switch (e) {
    case Expectation::kPresent:
      return '1';
    case Expectation::kAbsent:
      return '0';
    case Expectation::kNone:
      return '-';
  }
  return '-';
}

}  // namespace qsweep
