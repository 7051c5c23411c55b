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

#include <immintrin.h>

#include "objcontract/kernels/kernels.hpp"

namespace objcontract::kernels {
namespace {

void add_offset_avx2(const std::int64_t* src, std::int64_t offset,
                     std::int64_t* dst, std::size_t n) {
  const __m256i off = _mm256_set1_epi64x(offset);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i b =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i + 4));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                        _mm256_add_epi64(a, off));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i + 4),
                        _mm256_add_epi64(b, off));
  }
  for (; i + 4 <= n; i += 4) {
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                        _mm256_add_epi64(a, off));
  }
  for (; i < n; ++i) dst[i] = src[i] + offset;
}

// 4-bit lane mask of violating states.
inline int violation_bits(__m256i cs, __m256i ds) {
  const __m256i zero = _mm256_setzero_si256();
  const __m256i minus_one = _mm256_set1_epi64x(-1);
  const __m256i c_neg = _mm256_cmpgt_epi64(zero, cs);
  const __m256i d_nonneg = _mm256_cmpgt_epi64(ds, minus_one);
  const __m256i c_zero = _mm256_cmpeq_epi64(cs, zero);
  const __m256i d_zero = _mm256_cmpeq_epi64(ds, zero);
  const __m256i bad = _mm256_or_si256(_mm256_and_si256(c_neg, d_nonneg),
                                      _mm256_andnot_si256(d_zero, c_zero));
  return _mm256_movemask_pd(_mm256_castsi256_pd(bad));
}

std::size_t find_order_violation_avx2(const std::int64_t* c,
                                      const std::int64_t* d,
                                      std::int64_t c_off, std::int64_t d_off,
                                      std::size_t n) {
  const __m256i coff = _mm256_set1_epi64x(c_off);
  const __m256i doff = _mm256_set1_epi64x(d_off);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i cs = _mm256_add_epi64(
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(c + i)), coff);
    __m256i ds = _mm256_add_epi64(
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(d + i)), doff);
    const int bits = violation_bits(cs, ds);
    if (bits != 0) return i + static_cast<std::size_t>(__builtin_ctz(bits));
  }
  for (; i < n; ++i) {
    const std::int64_t cs = c[i] + c_off;
    const std::int64_t ds = d[i] + d_off;
    if ((cs < 0 && ds >= 0) || (cs == 0 && ds != 0)) return i;
  }
  return n;
}

void and_constraint_mask_avx2(const std::int64_t* lhs, std::int64_t off,
                              Sense sense, std::int64_t rhs,
                              std::uint8_t* mask, std::size_t n) {
  const __m256i voff = _mm256_set1_epi64x(off);
  const __m256i vrhs = _mm256_set1_epi64x(rhs);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i v = _mm256_add_epi64(
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(lhs + i)), voff);
    __m256i ok;
    switch (sense) {
      case Sense::kLe:  // !(v > rhs)
        ok = _mm256_xor_si256(_mm256_cmpgt_epi64(v, vrhs),
                              _mm256_set1_epi64x(-1));
        break;
      case Sense::kEq:
        ok = _mm256_cmpeq_epi64(v, vrhs);
        break;
      default:  // !(rhs > v)
        ok = _mm256_xor_si256(_mm256_cmpgt_epi64(vrhs, v),
                              _mm256_set1_epi64x(-1));
        break;
    }
    const int bits = _mm256_movemask_pd(_mm256_castsi256_pd(ok));
    mask[i] &= static_cast<std::uint8_t>(bits & 1);
    mask[i + 1] &= static_cast<std::uint8_t>((bits >> 1) & 1);
    mask[i + 2] &= static_cast<std::uint8_t>((bits >> 2) & 1);
    mask[i + 3] &= static_cast<std::uint8_t>((bits >> 3) & 1);
  }
  for (; i < n; ++i) {
    const std::int64_t v = lhs[i] + off;
    const bool ok = sense == Sense::kLe   ? v <= rhs
                    : sense == Sense::kEq ? v == rhs
                                          : v >= rhs;
    mask[i] &= static_cast<std::uint8_t>(ok);
  }
}

}  // namespace

const KernelTable& avx2_table() {
  static const KernelTable table{add_offset_avx2, find_order_violation_avx2,
                                 and_constraint_mask_avx2};
  return table;
}

}  // namespace objcontract::kernels
