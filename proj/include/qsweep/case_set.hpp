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

#ifndef QSWEEP_CASE_SET_HPP_
#define QSWEEP_CASE_SET_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qsweep {

// A subset of the cases of a dataset, packed one bit per case. All set
// algebra goes through the SIMD kernel table.
class CaseSet {
 public:
  CaseSet() = default;
  // Empty set over `size` cases.
  explicit CaseSet(std::size_t size);

  static CaseSet all(std::size_t size);
  static CaseSet from_bits(std::span<const std::uint8_t> bits);
  // Cases whose value is >= threshold.
  static CaseSet at_least(std::span<const double> values, double threshold);

  std::size_t size() const { return size_; }
  std::size_t count() const;
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1; }
  void set(std::size_t i, bool value);

  CaseSet complement() const;
  CaseSet& operator&=(const CaseSet& other);
  CaseSet& operator|=(const CaseSet& other);
  // this &= ~other
  CaseSet& subtract(const CaseSet& other);

  std::size_t count_and(const CaseSet& other) const;

  std::vector<std::uint8_t> to_bits() const;
  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const CaseSet&, const CaseSet&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

inline CaseSet operator&(CaseSet a, const CaseSet& b) { return a &= b; }
inline CaseSet operator|(CaseSet a, const CaseSet& b) { return a |= b; }

}  // namespace qsweep

#endif  // QSWEEP_CASE_SET_HPP_
