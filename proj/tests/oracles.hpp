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

// Test-side ground truth. Everything here is deliberately naive: plain loops
// over the hypercube or over {-1,0,1}^n, no shared code with the library
// beyond its value types.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "objcontract/core.hpp"

namespace oracle {

using Vec = std::vector<std::int64_t>;

inline std::int64_t sum_of(const Vec& v, std::uint64_t mask) {
  std::int64_t s = 0;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (mask >> j & 1U) s += v[j];
  }
  return s;
}

inline int sgn(std::int64_t v) { return (v > 0) - (v < 0); }

// Pairwise comparison of every pair of subsets.
inline bool order_preserving(const Vec& c, const Vec& d) {
  const std::uint64_t total = std::uint64_t{1} << c.size();
  std::vector<std::int64_t> sc(total), sd(total);
  for (std::uint64_t m = 0; m < total; ++m) {
    sc[m] = sum_of(c, m);
    sd[m] = sum_of(d, m);
  }
  for (std::uint64_t a = 0; a < total; ++a) {
    for (std::uint64_t b = a + 1; b < total; ++b) {
      if (sgn(sc[a] - sc[b]) != sgn(sd[a] - sd[b])) return false;
    }
  }
  return true;
}

// Calls f(z) for every z in {-1,0,1}^n, z_0 most significant, -1 first.
inline void for_each_ternary(std::size_t n, const std::function<void(const std::vector<int>&)>& f) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  std::vector<int> z(n);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t r = idx;
    for (std::size_t i = n; i-- > 0;) {
      z[i] = static_cast<int>(r % 3) - 1;
      r /= 3;
    }
    f(z);
  }
}

inline std::int64_t dot(const Vec& v, const std::vector<int>& z) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * z[i];
  return s;
}

inline std::int64_t max_abs(const Vec& c) {
  std::int64_t m = 0;
  for (auto v : c) m = std::max(m, v < 0 ? -v : v);
  return m;
}

// Every disjoint pair (S, T): c(S) < c(T) needs d(S) + 1 <= d(T), equal
// c-sums need equal d-sums; plus 1 <= |d_i| <= max|c| with matching sign.
inline bool ocpset_feasible(const Vec& c, const Vec& d) {
  const std::int64_t m = max_abs(c);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const std::int64_t a = d[i] < 0 ? -d[i] : d[i];
    if (a < 1 || a > m || sgn(c[i]) != sgn(d[i])) return false;
  }
  bool ok = true;
  for_each_ternary(c.size(), [&](const std::vector<int>& z) {
    const std::int64_t cz = dot(c, z);
    const std::int64_t dz = dot(d, z);
    if (cz < 0 && dz > -1) ok = false;
    if (cz == 0 && dz != 0) ok = false;
  });
  return ok;
}

struct TernaryBest {
  std::vector<int> z;
  std::int64_t dsum = 0;
  std::int64_t csum = 0;
};

// max d.z s.t. c.z <= 0, then min c.z, then first in enumeration order.
inline TernaryBest oracle_a(const Vec& c, const Vec& d) {
  std::optional<TernaryBest> best;
  for_each_ternary(c.size(), [&](const std::vector<int>& z) {
    const std::int64_t cz = dot(c, z);
    if (cz > 0) return;
    const std::int64_t dz = dot(d, z);
    if (!best || dz > best->dsum || (dz == best->dsum && cz < best->csum)) {
      best = TernaryBest{z, dz, cz};
    }
  });
  return *best;
}

// min c.z s.t. d.z == 0, then first in enumeration order.
inline TernaryBest oracle_b(const Vec& c, const Vec& d) {
  std::optional<TernaryBest> best;
  for_each_ternary(c.size(), [&](const std::vector<int>& z) {
    if (dot(d, z) != 0) return;
    const std::int64_t cz = dot(c, z);
    if (!best || cz < best->csum) best = TernaryBest{z, 0, cz};
  });
  return *best;
}

// Minimal sum(d) over d in [1, max c]^n (positive c) passing
// ocpset_feasible. Candidates are restricted to vectors ordered like c,
// which every feasible d is (singleton pairs), so the search stays
// exhaustive over the feasible region.
inline Vec brute_min_contraction(const Vec& c) {
  const std::size_t n = c.size();
  const std::int64_t m = max_abs(c);
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return c[a] < c[b]; });
  Vec best;
  std::int64_t best_sum = 0;
  Vec d(n, 0);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t k, std::int64_t sum) {
    if (!best.empty() && sum >= best_sum) return;
    if (k == n) {
      if (ocpset_feasible(c, d)) {
        best = d;
        best_sum = sum;
      }
      return;
    }
    const std::size_t i = order[k];
    std::int64_t lo = 1;
    if (k > 0) {
      const std::size_t p = order[k - 1];
      lo = c[p] == c[i] ? d[p] : d[p] + 1;
      if (c[p] == c[i]) {
        d[i] = lo;
        rec(k + 1, sum + lo);
        return;
      }
    }
    for (std::int64_t v = lo; v <= m; ++v) {
      d[i] = v;
      rec(k + 1, sum + v);
    }
  };
  rec(0, 0);
  return best;
}

// Minimal sum |d_i| over the signed box 1 <= |d_i| <= max|c|.
inline Vec brute_min_signed(const Vec& c) {
  const std::size_t n = c.size();
  const std::int64_t m = max_abs(c);
  Vec best;
  std::int64_t best_sum = 0;
  Vec d(n, 0);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t sum) {
    if (!best.empty() && sum >= best_sum) return;
    if (i == n) {
      if (ocpset_feasible(c, d)) {
        best = d;
        best_sum = sum;
      }
      return;
    }
    for (std::int64_t v = -m; v <= m; ++v) {
      if (v == 0) continue;
      d[i] = v;
      rec(i + 1, sum + (v < 0 ? -v : v));
    }
  };
  rec(0, 0);
  return best;
}

// Union volume of boxes [ref, s] by inclusion-exclusion over all nonempty
// subsets of points.
inline std::int64_t hypervolume(const std::vector<objcontract::Point>& pts,
                                const objcontract::Point& ref) {
  const std::size_t k = pts.size();
  std::int64_t total = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    std::int64_t vol = 1;
    for (std::size_t dim = 0; dim < ref.size(); ++dim) {
      std::int64_t lo = INT64_MAX;
      for (std::size_t i = 0; i < k; ++i) {
        if (mask >> i & 1U) lo = std::min(lo, pts[i][dim]);
      }
      vol *= std::max<std::int64_t>(0, lo - ref[dim]);
    }
    total += (__builtin_popcountll(mask) % 2 == 1) ? vol : -vol;
  }
  return total;
}

// Efficient solutions by pairwise dominance over the feasible set.
inline std::vector<objcontract::BinaryVector> efficient_set(const objcontract::Instance& inst) {
  std::vector<objcontract::BinaryVector> xs;
  std::vector<objcontract::Point> ys;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << inst.nvars); ++m) {
    objcontract::BinaryVector x(inst.nvars);
    for (std::size_t j = 0; j < inst.nvars; ++j) x[j] = m >> j & 1U;
    bool ok = true;
    for (const auto& con : inst.constraints) {
      std::int64_t a = 0;
      for (std::size_t j = 0; j < inst.nvars; ++j) a += con.coeffs[j] * x[j];
      if (con.sense == objcontract::Sense::kLe && a > con.rhs) ok = false;
      if (con.sense == objcontract::Sense::kGe && a < con.rhs) ok = false;
      if (con.sense == objcontract::Sense::kEq && a != con.rhs) ok = false;
    }
    if (!ok) continue;
    std::vector<std::int64_t> y;
    for (const auto& row : inst.objectives.rows()) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < inst.nvars; ++j) s += row[j] * x[j];
      y.push_back(s);
    }
    xs.push_back(x);
    ys.emplace_back(std::move(y));
  }
  std::vector<objcontract::BinaryVector> out;
  for (std::size_t a = 0; a < xs.size(); ++a) {
    bool dominated = false;
    for (std::size_t b = 0; b < xs.size() && !dominated; ++b) {
      bool le = true, lt = false;
      for (std::size_t k = 0; k < ys[a].size(); ++k) {
        if (ys[b][k] > ys[a][k]) le = false;
        if (ys[b][k] < ys[a][k]) lt = true;
      }
      dominated = le && lt;
    }
    if (!dominated) out.push_back(xs[a]);
  }
  return out;
}

inline Vec random_vec(std::mt19937_64& rng, std::size_t n, std::int64_t lo, std::int64_t hi) {
  std::uniform_int_distribution<std::int64_t> u(lo, hi);
  Vec v(n);
  for (auto& x : v) x = u(rng);
  return v;
}

}  // namespace oracle
