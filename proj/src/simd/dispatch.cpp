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

#include <atomic>
#include <cstdlib>
#include <string_view>

#include "kernels_internal.hpp"

namespace qsweep::simd {
namespace {

bool cpu_has_avx2() {
#if defined(QSWEEP_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelTable* initial_table() {
  const KernelTable* best = &detail::kScalarTable;
  if (const KernelTable* avx2 = kernel_table(Backend::kAvx2)) best = avx2;
  if (const char* env = std::getenv("QSWEEP_SIMD")) {
    const std::string_view wanted(env);
    if (wanted == "scalar") return &detail::kScalarTable;
    if (wanted == "avx2" && kernel_table(Backend::kAvx2)) {
      return kernel_table(Backend::kAvx2);
    }
  }
  return best;
}

std::atomic<const KernelTable*>& active_slot() {
  static std::atomic<const KernelTable*> slot{initial_table()};
  return slot;
}

}  // namespace

const KernelTable* kernel_table(Backend backend) {
  switch (backend) {
    case Backend::kScalar:
      return &detail::kScalarTable;
    case Backend::kAvx2:
#if defined(QSWEEP_HAVE_AVX2)
      if (cpu_has_avx2()) return &detail::kAvx2Table;
#endif
      return nullptr;
  }
  return nullptr;
}

const KernelTable& active() { return *active_slot().load(std::memory_order_acquire); }

bool set_backend(Backend backend) {
  const KernelTable* table = kernel_table(backend);
  if (table == nullptr) return false;
  active_slot().store(table, std::memory_order_release);
  return true;
}

std::vector<Backend> available_backends() {
  std::vector<Backend> out;
  for (Backend b : {Backend::kScalar, Backend::kAvx2}) {
    if (kernel_table(b) != nullptr) out.push_back(b);
  }
  return out;
}

std::string_view backend_name(Backend backend) {
  switch (backend) {
    case Backend::kScalar:
      return "scalar";
    case Backend::kAvx2:
      return "avx2";
  }
  return "unknown";
}

void threshold_mask(std::span<const double> values, double threshold,
                    std::span<std::uint64_t> words) {
  active().threshold_mask(values.data(), values.size(), threshold, words.data());
}

std::size_t popcount(std::span<const std::uint64_t> a) {
  return active().popcount(a.data(), a.size());
}

std::size_t popcount_and(std::span<const std::uint64_t> a,
                         std::span<const std::uint64_t> b) {
  return active().popcount_and(a.data(), b.data(), a.size());
}

}  // namespace qsweep::simd
