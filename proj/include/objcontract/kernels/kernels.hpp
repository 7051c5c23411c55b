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

#pragma once

// Data-parallel inner loops shared by the enumeration oracles and the
// separation routines. Every kernel has a portable scalar reference; wider
// variants are selected once at startup from the CPU feature set and must
// produce bit-identical results.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace objcontract::kernels {

enum class Isa { kScalar, kAvx2 };

enum class Sense : int { kLe = 0, kEq = 1, kGe = 2 };

struct KernelTable {
  // dst[i] = src[i] + offset
  void (*add_offset)(const std::int64_t* src, std::int64_t offset,
                     std::int64_t* dst, std::size_t n);
  // First i with (c[i]+c_off < 0 and d[i]+d_off >= 0) or
  // (c[i]+c_off == 0 and d[i]+d_off != 0); n when none.
  std::size_t (*find_order_violation)(const std::int64_t* c,
                                      const std::int64_t* d,
                                      std::int64_t c_off, std::int64_t d_off,
                                      std::size_t n);
  // mask[i] &= (lhs[i] + off <sense> rhs)
  void (*and_constraint_mask)(const std::int64_t* lhs, std::int64_t off,
                              Sense sense, std::int64_t rhs,
                              std::uint8_t* mask, std::size_t n);
};

const KernelTable& scalar_table();
#if defined(OBJCONTRACT_BUILD_AVX2)
const KernelTable& avx2_table();
#endif

bool isa_available(Isa isa);
const KernelTable& table_for(Isa isa);

// The process-wide selection. Defaults to the widest available ISA, or to
// the value of OBJCONTRACT_SIMD ("scalar" / "avx2") when set.
Isa active_isa();
// Not synchronized; call before spawning workers.
void set_active_isa(Isa isa);
std::string_view isa_name(Isa isa);

inline void add_offset(std::span<const std::int64_t> src, std::int64_t offset,
                       std::span<std::int64_t> dst) {
  table_for(active_isa()).add_offset(src.data(), offset, dst.data(),
                                     src.size());
}

inline std::size_t find_order_violation(std::span<const std::int64_t> c,
                                        std::span<const std::int64_t> d,
                                        std::int64_t c_off,
                                        std::int64_t d_off) {
  return table_for(active_isa())
      .find_order_violation(c.data(), d.data(), c_off, d_off, c.size());
}

inline void and_constraint_mask(std::span<const std::int64_t> lhs,
                                std::int64_t off, Sense sense,
                                std::int64_t rhs,
                                std::span<std::uint8_t> mask) {
  table_for(active_isa())
      .and_constraint_mask(lhs.data(), off, sense, rhs, mask.data(),
                           lhs.size());
}

}  // namespace objcontract::kernels
