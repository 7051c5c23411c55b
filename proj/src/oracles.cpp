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

// Meet-in-the-middle separation oracles. Each half enumerates its signed
// partial sums in lexicographic order of z; the right half is indexed by
// c-sum (prefix maxima of d-sum) and by (d-sum, c-sum, state).

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "objcontract/ip_kernel.hpp"
#include "ternary.hpp"

namespace objcontract {
namespace {

struct HalfStates {
  std::vector<std::int64_t> c;
  std::vector<std::int64_t> d;
};

struct Split {
  std::size_t left_len;
  HalfStates left;
  HalfStates right;
  // Right states ordered by (d, c, state).
  std::vector<std::uint32_t> by_d;
};

Split build(std::span<const std::int64_t> c, std::span<const std::int64_t> d) {
  if (c.size() != d.size()) {
    throw DimensionError("oracle inputs differ in length");
  }
  if (c.empty()) throw DimensionError("oracle on an empty vector");
  if (c.size() > kOracleCap) {
    throw CapExceededError("separation oracle: n=" + std::to_string(c.size()) +
                           " exceeds " + std::to_string(kOracleCap));
  }
  checked_abs_sum(c);
  checked_abs_sum(d);
  const std::size_t h = c.size() / 2;
  Split s{h,
          {detail::ternary_sums(c.subspan(0, h)),
           detail::ternary_sums(d.subspan(0, h))},
          {detail::ternary_sums(c.subspan(h)), detail::ternary_sums(d.subspan(h))},
          {}};
  s.by_d.resize(s.right.c.size());
  std::iota(s.by_d.begin(), s.by_d.end(), 0U);
  const auto& rc = s.right.c;
  const auto& rd = s.right.d;
  std::sort(s.by_d.begin(), s.by_d.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (rd[a] != rd[b]) return rd[a] < rd[b];
    if (rc[a] != rc[b]) return rc[a] < rc[b];
    return a < b;
  });
  return s;
}

// Right states with d-sum == target, as a sub-range of by_d.
std::pair<std::size_t, std::size_t> d_range(const Split& s,
                                            std::int64_t target) {
  const auto& rd = s.right.d;
  auto lo = std::partition_point(s.by_d.begin(), s.by_d.end(),
                                 [&](std::uint32_t i) { return rd[i] < target; });
  auto hi = std::partition_point(lo, s.by_d.end(),
                                 [&](std::uint32_t i) { return rd[i] <= target; });
  return {static_cast<std::size_t>(lo - s.by_d.begin()),
          static_cast<std::size_t>(hi - s.by_d.begin())};
}

OracleSolution assemble(const Split& s, std::span<const std::int64_t> c,
                        std::span<const std::int64_t> d, std::uint32_t left,
                        std::uint32_t right) {
  OracleSolution sol;
  sol.z.resize(c.size());
  std::span<std::int8_t> z(sol.z);
  detail::decode_ternary(left, z.subspan(0, s.left_len));
  detail::decode_ternary(right, z.subspan(s.left_len));
  for (std::size_t i = 0; i < c.size(); ++i) {
    sol.csum += c[i] * sol.z[i];
    sol.dsum += d[i] * sol.z[i];
  }
  return sol;
}

}  // namespace

std::vector<std::uint32_t> OracleSolution::s_side() const {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z[i] == 1) out.push_back(static_cast<std::uint32_t>(i));
  }
  return out;
}

std::vector<std::uint32_t> OracleSolution::t_side() const {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z[i] == -1) out.push_back(static_cast<std::uint32_t>(i));
  }
  return out;
}

OracleSolution oracle_a(std::span<const std::int64_t> c,
                        std::span<const std::int64_t> d) {
  const Split s = build(c, d);
  const auto& lc = s.left.c;
  const auto& ld = s.left.d;
  const auto& rc = s.right.c;
  const auto& rd = s.right.d;

  // Best right d-sum among states with c-sum <= budget.
  std::vector<std::uint32_t> by_c(rc.size());
  std::iota(by_c.begin(), by_c.end(), 0U);
  std::sort(by_c.begin(), by_c.end(),
            [&](std::uint32_t a, std::uint32_t b) { return rc[a] < rc[b]; });
  std::vector<std::int64_t> prefix_max(by_c.size());
  std::int64_t run = std::numeric_limits<std::int64_t>::min();
  for (std::size_t k = 0; k < by_c.size(); ++k) {
    run = std::max(run, rd[by_c[k]]);
    prefix_max[k] = run;
  }

  std::int64_t delta = std::numeric_limits<std::int64_t>::min();
  for (std::size_t l = 0; l < lc.size(); ++l) {
    const std::int64_t budget = -lc[l];
    const auto it = std::partition_point(
        by_c.begin(), by_c.end(), [&](std::uint32_t i) { return rc[i] <= budget; });
    if (it == by_c.begin()) continue;
    delta = std::max(delta, ld[l] + prefix_max[static_cast<std::size_t>(
                                        it - by_c.begin()) - 1]);
  }

  // Deepest cut among the delta-maximizers, then the lexicographic winner.
  auto best_kappa_for = [&](std::size_t l) -> std::optional<std::int64_t> {
    const auto [b, e] = d_range(s, delta - ld[l]);
    if (b == e) return std::nullopt;
    const std::int64_t kappa = lc[l] + rc[s.by_d[b]];
    if (kappa > 0) return std::nullopt;
    return kappa;
  };
  std::int64_t kappa = std::numeric_limits<std::int64_t>::max();
  for (std::size_t l = 0; l < lc.size(); ++l) {
    if (auto k = best_kappa_for(l)) kappa = std::min(kappa, *k);
  }
  for (std::size_t l = 0; l < lc.size(); ++l) {
    if (best_kappa_for(l) == kappa) {
      const auto [b, e] = d_range(s, delta - ld[l]);
      return assemble(s, c, d, static_cast<std::uint32_t>(l), s.by_d[b]);
    }
  }
  throw InternalError("oracle A found no maximizer");
}

OracleSolution oracle_b(std::span<const std::int64_t> c,
                        std::span<const std::int64_t> d) {
  const Split s = build(c, d);
  const auto& lc = s.left.c;
  const auto& ld = s.left.d;
  const auto& rc = s.right.c;

  auto best_for = [&](std::size_t l) -> std::optional<std::int64_t> {
    const auto [b, e] = d_range(s, -ld[l]);
    if (b == e) return std::nullopt;
    return lc[l] + rc[s.by_d[b]];
  };
  std::int64_t kappa = std::numeric_limits<std::int64_t>::max();
  for (std::size_t l = 0; l < lc.size(); ++l) {
    if (auto k = best_for(l)) kappa = std::min(kappa, *k);
  }
  for (std::size_t l = 0; l < lc.size(); ++l) {
    if (best_for(l) == kappa) {
      const auto [b, e] = d_range(s, -ld[l]);
      return assemble(s, c, d, static_cast<std::uint32_t>(l), s.by_d[b]);
    }
  }
  throw InternalError("oracle B found no minimizer");
}

}  // namespace objcontract
