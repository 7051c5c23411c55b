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

// Brute-force ground truth over the hypercube. Every routine here has a hard
// size cap and refuses (CapExceededError) rather than truncating.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "objcontract/core.hpp"

namespace objcontract {

inline constexpr std::size_t kFeasibleCap = 24;
inline constexpr std::size_t kSignatureCap = 20;
inline constexpr std::size_t kOcpsetCap = 14;

struct FeasibleSolution {
  BinaryVector x;
  Point point;
};

// Feasible x in ascending binary encoding, each with f(x).
std::vector<FeasibleSolution> enumerate_feasible(const Instance& instance,
                                                 std::size_t cap = kFeasibleCap);

ParetoSet pareto_front(const Instance& instance, std::size_t cap = kFeasibleCap);

// All 2^n subset sums, index = binary encoding of x.
std::vector<std::int64_t> subset_sums(std::span<const std::int64_t> coeffs);

// Dense rank of c.x among all subset sums, indexed by binary encoding.
struct OrderSignature {
  std::vector<std::uint32_t> ranks;

  std::size_t distinct_values() const;
  friend bool operator==(const OrderSignature&,
                         const OrderSignature&) = default;
};

OrderSignature order_signature(const CoefficientVector& c,
                               std::size_t cap = kSignatureCap);

enum class ViolationKind {
  kOrderFlip,    // c(x) < c(y) but d(x) > d(y)
  kTieBroken,    // c(x) = c(y) but d(x) != d(y)
  kTieCreated,   // c(x) < c(y) but d(x) = d(y)
  kOutOfBounds,  // d_i outside the admissible box; x = e_i, y = 0
};

std::string_view to_string(ViolationKind k);

struct ViolationReport {
  ViolationKind kind;
  BinaryVector x;
  BinaryVector y;
  std::pair<std::int64_t, std::int64_t> original_values;     // (c.x, c.y)
  std::pair<std::int64_t, std::int64_t> transformed_values;  // (d.x, d.y)

  // Re-derives the violation from the stored values alone.
  bool consistent() const;
  std::string describe() const;
};

// Empty iff order_signature(c) == order_signature(d). Otherwise at least one
// witness per violated kind, in the order flip, tie-broken, tie-created.
std::vector<ViolationReport> verify_order_preserving(
    const CoefficientVector& c, const CoefficientVector& d,
    std::size_t cap = kSignatureCap);

// Checks every disjoint pair (S, T) of index sets through z in {-1,0,1}^n,
// plus the coefficient box. Reports are capped at `max_reports`; an empty
// result always means "feasible".
std::vector<ViolationReport> verify_ocpset_feasible(
    const CoefficientVector& c, const CoefficientVector& d,
    std::size_t cap = kOcpsetCap, std::size_t max_reports = 1000);

}  // namespace objcontract
