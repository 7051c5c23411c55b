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

#include "objcontract/kernels/kernels.hpp"

namespace objcontract::kernels {
namespace {

void add_offset_scalar(const std::int64_t* src, std::int64_t offset,
                       std::int64_t* dst, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = src[i] + offset;
}

std::size_t find_order_violation_scalar(const std::int64_t* c,
                                        const std::int64_t* d,
                                        std::int64_t c_off, std::int64_t d_off,
                                        std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t cs = c[i] + c_off;
    const std::int64_t ds = d[i] + d_off;
    if ((cs < 0 && ds >= 0) || (cs == 0 && ds != 0)) return i;
  }
  return n;
}

void and_constraint_mask_scalar(const std::int64_t* lhs, std::int64_t off,
                                Sense sense, std::int64_t rhs,
                                std::uint8_t* mask, std::size_t n) {
  switch (sense) {
    case Sense::kLe:
      for (std::size_t i = 0; i < n; ++i) mask[i] &= (lhs[i] + off <= rhs);
      break;
    case Sense::kEq:
      for (std::size_t i = 0; i < n; ++i) mask[i] &= (lhs[i] + off == rhs);
      break;
    case Sense::kGe:
      for (std::size_t i = 0; i < n; ++i) mask[i] &= (lhs[i] + off >= rhs);
      break;
  }
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{add_offset_scalar, find_order_violation_scalar,
                                 and_constraint_mask_scalar};
  return table;
}

}  // namespace objcontract::kernels
