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

#include "qsweep/case_set.hpp"

#include <stdexcept>

#include "qsweep/simd/kernels.hpp"

namespace qsweep {

CaseSet::CaseSet(std::size_t size)
    : size_(size), words_(simd::word_count(size), 0) {}

CaseSet CaseSet::all(std::size_t size) {
  CaseSet s(size);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (size % 64 != 0) s.words_.back() = (std::uint64_t{1} << (size % 64)) - 1;
  return s;
}

CaseSet CaseSet::from_bits(std::span<const std::uint8_t> bits) {
  CaseSet s(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != 0) s.words_[i / 64] |= std::uint64_t{1} << (i % 64);
  }
  return s;
}

CaseSet CaseSet::at_least(std::span<const double> values, double threshold) {
  CaseSet s(values.size());
  simd::threshold_mask(values, threshold, s.words_);
  return s;
}

std::size_t CaseSet::count() const { return simd::popcount(words_); }

void CaseSet::set(std::size_t i, bool value) {
  const std::uint64_t bit = std::uint64_t{1} << (i % 64);
  if (value) {
    words_[i / 64] |= bit;
  } else {
    words_[i / 64] &= ~bit;
  }
}

CaseSet CaseSet::complement() const {
  CaseSet out = all(size_);
  simd::active().and_not_into(out.words_.data(), words_.data(), words_.size());
  return out;
}

CaseSet& CaseSet::operator&=(const CaseSet& other) {
  if (other.size_ != size_) throw std::invalid_argument("CaseSet size mismatch");
  simd::active().and_into(words_.data(), other.words_.data(), words_.size());
  return *this;
}

CaseSet& CaseSet::operator|=(const CaseSet& other) {
  if (other.size_ != size_) throw std::invalid_argument("CaseSet size mismatch");
  simd::active().or_into(words_.data(), other.words_.data(), words_.size());
  return *this;
}

CaseSet& CaseSet::subtract(const CaseSet& other) {
  if (other.size_ != size_) throw std::invalid_argument("CaseSet size mismatch");
  simd::active().and_not_into(words_.data(), other.words_.data(), words_.size());
  return *this;
}

std::size_t CaseSet::count_and(const CaseSet& other) const {
  if (other.size_ != size_) throw std::invalid_argument("CaseSet size mismatch");
  return simd::popcount_and(words_, other.words_);
}

std::vector<std::uint8_t> CaseSet::to_bits() const {
  std::vector<std::uint8_t> out(size_);
  for (std::size_t i = 0; i < size_; ++i) out[i] = test(i) ? 1 : 0;
  return out;
}

}  // namespace qsweep
