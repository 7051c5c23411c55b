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

// Signed partial sums over z in {-1,0,1}^k. State s encodes z in base 3 with
// digit z_j + 1 and z_0 most significant, so ascending s is lexicographic
// order on z (with -1 < 0 < 1).

#include <cstdint>
#include <span>
#include <vector>

#include "objcontract/kernels/kernels.hpp"

namespace objcontract::detail {

inline std::vector<std::int64_t> ternary_sums(
    std::span<const std::int64_t> coeffs) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < coeffs.size(); ++i) total *= 3;
  std::vector<std::int64_t> out(total, 0);
  std::size_t m = 1;
  for (std::size_t jj = coeffs.size(); jj-- > 0;) {
    const std::int64_t cj = coeffs[jj];
    std::span<std::int64_t> all(out);
    kernels::add_offset(all.subspan(0, m), cj, all.subspan(2 * m, m));
    kernels::add_offset(all.subspan(0, m), 0, all.subspan(m, m));
    kernels::add_offset(all.subspan(0, m), -cj, all.subspan(0, m));
    m *= 3;
  }
  return out;
}

inline void decode_ternary(std::uint64_t state, std::span<std::int8_t> z) {
  for (std::size_t j = z.size(); j-- > 0;) {
    z[j] = static_cast<std::int8_t>(static_cast<int>(state % 3) - 1);
    state /= 3;
  }
}

inline std::uint64_t pow3(std::size_t k) {
  std::uint64_t r = 1;
  while (k-- > 0) r *= 3;
  return r;
}

}  // namespace objcontract::detail
