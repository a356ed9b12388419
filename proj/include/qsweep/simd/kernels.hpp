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

// Data-parallel inner loops of the pipeline.
//
// Case memberships are stored as packed bit vectors (bit i of word i / 64 is
// case i). Every kernel has a portable scalar reference implementation and,
// on x86-64, an AVX2 variant. The active table is picked once at startup from
// CPUID and may be overridden with QSWEEP_SIMD=scalar|avx2 or set_backend().
//
// Contract shared by all backends: bits past the last case are always zero
// on output, and results are bit-identical across backends.

#ifndef QSWEEP_SIMD_KERNELS_HPP_
#define QSWEEP_SIMD_KERNELS_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace qsweep::simd {

enum class Backend { kScalar, kAvx2 };

struct KernelTable {
  Backend backend;
  const char* name;

  // words[i / 64] bit (i % 64) = values[i] >= threshold, for i < n.
  // `words` holds ceil(n / 64) entries; the trailing bits are cleared.
  void (*threshold_mask)(const double* values, std::size_t n, double threshold,
                         std::uint64_t* words);
  std::size_t (*popcount)(const std::uint64_t* a, std::size_t nwords);
  std::size_t (*popcount_and)(const std::uint64_t* a, const std::uint64_t* b,
                              std::size_t nwords);
  // dst &= src
  void (*and_into)(std::uint64_t* dst, const std::uint64_t* src,
                   std::size_t nwords);
  // dst &= ~src
  void (*and_not_into)(std::uint64_t* dst, const std::uint64_t* src,
                       std::size_t nwords);
  // dst |= src
  void (*or_into)(std::uint64_t* dst, const std::uint64_t* src,
                  std::size_t nwords);
  // codes[i] |= bit_i(words) << shift, for i < n.
  void (*or_shifted_bits)(std::uint32_t* codes, std::size_t n,
                          const std::uint64_t* words, unsigned shift);
};

// Table for a specific backend, or nullptr when the CPU (or the build) does
// not support it.
const KernelTable* kernel_table(Backend backend);

// Currently active table.
const KernelTable& active();

// Switches the active backend. Returns false (and leaves the active table
// unchanged) when the backend is unavailable.
bool set_backend(Backend backend);

std::vector<Backend> available_backends();

std::string_view backend_name(Backend backend);

constexpr std::size_t word_count(std::size_t nbits) {
  return (nbits + 63) / 64;
}

// Span conveniences over the active table.
void threshold_mask(std::span<const double> values, double threshold,
                    std::span<std::uint64_t> words);
std::size_t popcount(std::span<const std::uint64_t> a);
std::size_t popcount_and(std::span<const std::uint64_t> a,
                         std::span<const std::uint64_t> b);

}  // namespace qsweep::simd

#endif  // QSWEEP_SIMD_KERNELS_HPP_
