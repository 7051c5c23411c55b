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

// Exact integer-programming kernel for the contraction master problem and its
// two separation subproblems. All rows carry coefficients in {-1, 0, +1}.

#include <chrono>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "objcontract/exact.hpp"

namespace objcontract {

enum class RowSense {
  kStrict,  // sum(minus) + 1 <= sum(plus)
  kEqual,   // sum(minus) == sum(plus)
};

struct CutRow {
  std::vector<std::uint32_t> plus;   // T side, sorted
  std::vector<std::uint32_t> minus;  // S side, sorted
  RowSense sense = RowSense::kStrict;

  static CutRow strict(std::vector<std::uint32_t> minus,
                       std::vector<std::uint32_t> plus);
  static CutRow equal(std::vector<std::uint32_t> minus,
                      std::vector<std::uint32_t> plus);

  // sum(plus) - sum(minus)
  std::int64_t activity(std::span<const std::int64_t> x) const;
  bool satisfied_by(std::span<const std::int64_t> x) const;
  std::string describe() const;

  friend bool operator==(const CutRow&, const CutRow&) = default;
  friend auto operator<=>(const CutRow&, const CutRow&) = default;
};

// min sum(x)  s.t.  lower <= x <= upper, x integer, every row.
struct MasterModel {
  std::size_t nvars = 0;
  std::vector<std::int64_t> lower;
  std::vector<std::int64_t> upper;
  std::vector<CutRow> rows;

  void validate() const;
  bool feasible(std::span<const std::int64_t> x) const;
};

enum class MasterStatus { kOptimal, kInfeasible, kTimeLimit };

struct MasterResult {
  MasterStatus status = MasterStatus::kInfeasible;
  // Optimal (or best found under kTimeLimit) assignment; empty if none.
  std::vector<std::int64_t> values;
  std::int64_t objective = 0;
  std::uint64_t nodes = 0;
};

struct MasterOptions {
  std::optional<std::chrono::steady_clock::time_point> deadline;
  // A proven lower bound on the optimum (e.g. the previous master value
  // when rows are only ever added). The search then deepens the objective
  // cutoff from this value upwards and stops at the first feasible level.
  std::optional<std::int64_t> objective_floor;
};

// Depth-first branch and bound over variables in index order. A row is
// enforced as soon as its highest-index variable is fixed; unfixed variables
// are bounded by a forward pass over the rows they close. Among optimal
// assignments the lexicographically smallest is returned. A supplied
// incumbent must satisfy the model (std::invalid_argument otherwise); the
// result never has a larger objective than it.
MasterResult solve_master(const MasterModel& model,
                          std::optional<std::span<const std::int64_t>> incumbent,
                          const MasterOptions& options = {});

struct OracleSolution {
  std::vector<std::int8_t> z;  // in {-1, 0, +1}
  std::int64_t dsum = 0;       // sum d_i z_i
  std::int64_t csum = 0;       // sum c_i z_i

  std::vector<std::uint32_t> s_side() const;  // z_i = +1
  std::vector<std::uint32_t> t_side() const;  // z_i = -1
};

// Largest n either oracle accepts (3^(n/2) states per half).
inline constexpr std::size_t kOracleCap = 32;

// max d.z s.t. c.z <= 0; among maximizers min c.z, then lexicographically
// smallest z.
OracleSolution oracle_a(std::span<const std::int64_t> c,
                        std::span<const std::int64_t> d);

// min c.z s.t. d.z == 0; among minimizers lexicographically smallest z.
OracleSolution oracle_b(std::span<const std::int64_t> c,
                        std::span<const std::int64_t> d);

}  // namespace objcontract
