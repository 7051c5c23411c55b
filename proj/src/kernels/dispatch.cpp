// Copyright 2026 The objcontract Authors
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

#include "objcontract/kernels/kernels.hpp"

namespace objcontract::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(OBJCONTRACT_BUILD_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa detect_default() {
  if (const char* env = std::getenv("OBJCONTRACT_SIMD")) {
    const std::string_view v(env);
    if (v == "scalar") return Isa::kScalar;
    if (v == "avx2" && cpu_has_avx2()) return Isa::kAvx2;
  }
  return cpu_has_avx2() ? Isa::kAvx2 : Isa::kScalar;
}

std::atomic<Isa>& selected() {
  static std::atomic<Isa> isa{detect_default()};
  return isa;
}

}  // namespace

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
      return cpu_has_avx2();
  }
  return false;
}

const KernelTable& table_for(Isa isa) {
#if defined(OBJCONTRACT_BUILD_AVX2)
  if (isa == Isa::kAvx2) return avx2_table();
#else
  (void)isa;
#endif
  return scalar_table();
}

Isa active_isa() { return selected().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  selected().store(isa_available(isa) ? isa : Isa::kScalar,
                   std::memory_order_relaxed);
}

std::string_view isa_name(Isa isa) {
  return isa == Isa::kAvx2 ? "avx2" : "scalar";
}

}  // namespace objcontract::kernels
