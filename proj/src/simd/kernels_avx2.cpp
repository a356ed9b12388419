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

// AVX2 kernels. This translation unit is compiled with -mavx2 and is only
// reached through the dispatcher after a CPUID check.

#include <immintrin.h>

#include <bit>
#include <cstddef>
#include <cstdint>

#include "kernels_internal.hpp"

namespace qsweep::simd::detail {
namespace {

void threshold_mask(const double* values, std::size_t n, double threshold,
                    std::uint64_t* words) {
  const __m256d t = _mm256_set1_pd(threshold);
  const std::size_t full = n / 64;
  for (std::size_t w = 0; w < full; ++w) {
    const double* block = values + w * 64;
    std::uint64_t bits = 0;
    for (unsigned j = 0; j < 16; ++j) {
      const __m256d v = _mm256_loadu_pd(block + 4 * j);
      const auto m = static_cast<std::uint64_t>(
          _mm256_movemask_pd(_mm256_cmp_pd(v, t, _CMP_GE_OQ)));
      bits |= m << (4 * j);
    }
    words[w] = bits;
  }
  if (full * 64 < n) {
    std::uint64_t bits = 0;
    for (std::size_t i = full * 64; i < n; ++i) {
      if (values[i] >= threshold) bits |= std::uint64_t{1} << (i % 64);
    }
    words[full] = bits;
  }
}

// Nibble-lookup popcount (Mula), reduced with SAD against zero.
inline __m256i popcount_bytes(__m256i v) {
  const __m256i lookup =
      _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,  //
                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  return _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo),
                         _mm256_shuffle_epi8(lookup, hi));
}

inline std::size_t horizontal_sum(__m256i acc) {
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  return static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
}

std::size_t popcount(const std::uint64_t* a, std::size_t nwords) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t w = 0;
  for (; w + 4 <= nwords; w += 4) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + w));
    acc = _mm256_add_epi64(
        acc, _mm256_sad_epu8(popcount_bytes(v), _mm256_setzero_si256()));
  }
  std::size_t total = horizontal_sum(acc);
  for (; w < nwords; ++w) total += std::popcount(a[w]);
  return total;
}

std::size_t popcount_and(const std::uint64_t* a, const std::uint64_t* b,
                         std::size_t nwords) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t w = 0;
  for (; w + 4 <= nwords; w += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + w));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + w));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(popcount_bytes(_mm256_and_si256(va, vb)),
                                                _mm256_setzero_si256()));
  }
  std::size_t total = horizontal_sum(acc);
  for (; w < nwords; ++w) total += std::popcount(a[w] & b[w]);
  return total;
}

template <typename Op, typename Tail>
inline void binary_op(std::uint64_t* dst, const std::uint64_t* src,
                      std::size_t nwords, Op op, Tail tail) {
  std::size_t w = 0;
  for (; w + 4 <= nwords; w += 4) {
    auto* d = reinterpret_cast<__m256i*>(dst + w);
    const __m256i vs = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + w));
    _mm256_storeu_si256(d, op(_mm256_loadu_si256(d), vs));
  }
  for (; w < nwords; ++w) dst[w] = tail(dst[w], src[w]);
}

void and_into(std::uint64_t* dst, const std::uint64_t* src,
              std::size_t nwords) {
  binary_op(
      dst, src, nwords, [](__m256i d, __m256i s) { return _mm256_and_si256(d, s); },
      [](std::uint64_t d, std::uint64_t s) { return d & s; });
}

void and_not_into(std::uint64_t* dst, const std::uint64_t* src,
                  std::size_t nwords) {
  // _mm256_andnot_si256(a, b) computes ~a & b.
  binary_op(
      dst, src, nwords, [](__m256i d, __m256i s) { return _mm256_andnot_si256(s, d); },
      [](std::uint64_t d, std::uint64_t s) { return d & ~s; });
}

void or_into(std::uint64_t* dst, const std::uint64_t* src,
             std::size_t nwords) {
  binary_op(
      dst, src, nwords, [](__m256i d, __m256i s) { return _mm256_or_si256(d, s); },
      [](std::uint64_t d, std::uint64_t s) { return d | s; });
}

// Expands one byte of membership bits into eight 32-bit lanes of 0/1 and ORs
// them, shifted, into the configuration codes.
void or_shifted_bits(std::uint32_t* codes, std::size_t n,
                     const std::uint64_t* words, unsigned shift) {
  const __m256i lane_bits = _mm256_setr_epi32(1, 2, 4, 8, 16, 32, 64, 128);
  const __m256i shift_v = _mm256_set1_epi32(static_cast<int>(shift));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const auto byte = static_cast<int>((words[i / 64] >> (i % 64)) & 0xff);
    const __m256i b = _mm256_and_si256(_mm256_set1_epi32(byte), lane_bits);
    const __m256i ones = _mm256_srli_epi32(_mm256_cmpeq_epi32(b, lane_bits), 31);
    auto* dst = reinterpret_cast<__m256i*>(codes + i);
    _mm256_storeu_si256(
        dst, _mm256_or_si256(_mm256_loadu_si256(dst), _mm256_sllv_epi32(ones, shift_v)));
  }
  for (; i < n; ++i) {
    const auto bit = static_cast<std::uint32_t>((words[i / 64] >> (i % 64)) & 1);
    codes[i] |= bit << shift;
  }
}

}  // namespace

const KernelTable kAvx2Table = {
    Backend::kAvx2, "avx2",       threshold_mask, popcount,
    popcount_and,   and_into,     and_not_into,   or_into,
    or_shifted_bits,
};

}  // namespace qsweep::simd::detail
