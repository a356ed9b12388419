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

// Reference kernels. Every other backend is tested against these.

#include <bit>
#include <cstddef>
#include <cstdint>

#include "kernels_internal.hpp"

namespace qsweep::simd::detail {
namespace {

void threshold_mask(const double* values, std::size_t n, double threshold,
                    std::uint64_t* words) {
  const std::size_t nwords = word_count(n);
  for (std::size_t w = 0; w < nwords; ++w) words[w] = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (values[i] >= threshold) words[i / 64] |= std::uint64_t{1} << (i % 64);
  }
}

std::size_t popcount(const std::uint64_t* a, std::size_t nwords) {
  std::size_t total = 0;
  for (std::size_t w = 0; w < nwords; ++w) total += std::popcount(a[w]);
  return total;
}

std::size_t popcount_and(const std::uint64_t* a, const std::uint64_t* b,
                         std::size_t nwords) {
  std::size_t total = 0;
  for (std::size_t w = 0; w < nwords; ++w) total += std::popcount(a[w] & b[w]);
  return total;
}

void and_into(std::uint64_t* dst, const std::uint64_t* src,
              std::size_t nwords) {
  for (std::size_t w = 0; w < nwords; ++w) dst[w] &= src[w];
}

void and_not_into(std::uint64_t* dst, const std::uint64_t* src,
                  std::size_t nwords) {
  for (std::size_t w = 0; w < nwords; ++w) dst[w] &= ~src[w];
}

void or_into(std::uint64_t* dst, const std::uint64_t* src,
             std::size_t nwords) {
  for (std::size_t w = 0; w < nwords; ++w) dst[w] |= src[w];
}

void or_shifted_bits(std::uint32_t* codes, std::size_t n,
                     const std::uint64_t* words, unsigned shift) {
  for (std::size_t i = 0; i < n; ++i) {
    const auto bit = static_cast<std::uint32_t>((words[i / 64] >> (i % 64)) & 1);
    codes[i] |= bit << shift;
  }
}

}  // namespace

const KernelTable kScalarTable = {
    Backend::kScalar, "scalar",     threshold_mask, popcount,
    popcount_and,     and_into,     and_not_into,   or_into,
    or_shifted_bits,
};

}  // namespace qsweep::simd::detail
