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

// LP relaxation bound for the master problem
//
//   min sum(x)  s.t.  sum_{pos} x - sum_{neg} x >= rhs,  lo <= x <= hi,
//
// solved through its dual, which has one equality per variable:
//
//   max rhs.y + lo.p - hi.q  s.t.  A^T y + p - q = 1,  y, p, q >= 0.
//
// The basis is n x n, and the all-p basis is always feasible, so no phase 1
// is needed and any basis reached along the way certifies a lower bound by
// weak duality. Bounds only change costs, so a parent's basis stays feasible
// for every child and serves as a warm start.

#include <cstdint>
#include <vector>

namespace objcontract::detail {

struct LpRow {
  std::vector<std::uint32_t> pos;
  std::vector<std::uint32_t> neg;
  std::int64_t rhs = 0;
};

struct LpResult {
  // Lower bound on the LP optimum; equal to it when `exact`.
  double value = 0.0;
  // Dual certificate of primal infeasibility.
  bool infeasible = false;
  bool exact = false;
  // Primal LP solution (the simplex multipliers); meaningful when exact.
  std::vector<double> x;
};

class LpBound {
 public:
  LpBound(std::size_t nvars, std::vector<LpRow> rows);

  // `basis` holds column ids; empty or stale input is replaced by the all-p
  // basis. On return it holds the final basis.
  LpResult solve(const std::vector<std::int64_t>& lo,
                 const std::vector<std::int64_t>& hi,
                 std::vector<std::uint32_t>& basis) const;

  std::size_t num_columns() const { return rows_.size() + 2 * n_; }

 private:
  double cost(std::uint32_t j, const std::vector<std::int64_t>& lo,
              const std::vector<std::int64_t>& hi) const;
  // pi . column j
  double dot(std::uint32_t j, const std::vector<double>& pi) const;
  // Dense column j.
  void column(std::uint32_t j, std::vector<double>& out) const;
  bool invert(const std::vector<std::uint32_t>& basis,
              std::vector<double>& binv) const;

  std::size_t n_;
  std::vector<LpRow> rows_;
};

}  // namespace objcontract::detail
