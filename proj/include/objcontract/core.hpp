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

// Data model for multi-objective binary programs
//   min f(x) = C x   s.t.  x in X subset of {0,1}^n
// and the dominance vocabulary used throughout the library.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "objcontract/exact.hpp"
#include "objcontract/kernels/kernels.hpp"

namespace objcontract {

// Decision vectors are stored one byte per variable, values 0 or 1.
using BinaryVector = std::vector<std::uint8_t>;

// kMixed means "at least one negative entry"; zeros among positives give
// kContainsZero.
enum class SignClass { kAllPositive, kContainsZero, kMixed };

std::string_view to_string(SignClass s);

// One objective's coefficients. Sortedness is not an invariant.
class CoefficientVector {
 public:
  CoefficientVector() = default;
  explicit CoefficientVector(std::vector<std::int64_t> coeffs);
  CoefficientVector(std::initializer_list<std::int64_t> coeffs)
      : CoefficientVector(std::vector<std::int64_t>(coeffs)) {}

  std::size_t size() const { return coeffs_.size(); }
  std::int64_t operator[](std::size_t i) const { return coeffs_[i]; }
  std::span<const std::int64_t> values() const { return coeffs_; }
  const std::vector<std::int64_t>& vec() const { return coeffs_; }

  SignClass sign_class() const;
  bool has_negative() const;
  // c . x
  std::int64_t evaluate(std::span<const std::uint8_t> x) const;

  friend bool operator==(const CoefficientVector&,
                         const CoefficientVector&) = default;

 private:
  std::vector<std::int64_t> coeffs_;
};

class ObjectiveMatrix {
 public:
  ObjectiveMatrix() = default;
  explicit ObjectiveMatrix(std::vector<CoefficientVector> rows);

  std::size_t num_objectives() const { return rows_.size(); }
  std::size_t num_vars() const { return rows_.empty() ? 0 : rows_[0].size(); }
  const CoefficientVector& row(std::size_t i) const { return rows_[i]; }
  const std::vector<CoefficientVector>& rows() const { return rows_; }

  friend bool operator==(const ObjectiveMatrix&,
                         const ObjectiveMatrix&) = default;

 private:
  std::vector<CoefficientVector> rows_;
};

using Sense = kernels::Sense;

struct LinearConstraint {
  std::vector<std::int64_t> coeffs;
  Sense sense = Sense::kLe;
  std::int64_t rhs = 0;

  bool satisfied_by(std::span<const std::uint8_t> x) const;
  friend bool operator==(const LinearConstraint&,
                         const LinearConstraint&) = default;
};

struct Instance {
  std::size_t nvars = 0;
  std::size_t nobjs = 0;
  ObjectiveMatrix objectives;
  std::vector<LinearConstraint> constraints;  // empty means X = {0,1}^n
  std::string name;

  // Throws DimensionError when the shape fields disagree with the data.
  void validate() const;
  bool feasible(std::span<const std::uint8_t> x) const;

  // Structural equality; the name is a label and does not participate.
  friend bool operator==(const Instance& a, const Instance& b) {
    return a.nvars == b.nvars && a.nobjs == b.nobjs &&
           a.objectives == b.objectives && a.constraints == b.constraints;
  }
};

struct Point {
  std::vector<std::int64_t> values;

  Point() = default;
  explicit Point(std::vector<std::int64_t> v) : values(std::move(v)) {}
  Point(std::initializer_list<std::int64_t> v) : values(v) {}

  std::size_t size() const { return values.size(); }
  std::int64_t operator[](std::size_t i) const { return values[i]; }

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

Point evaluate(const ObjectiveMatrix& objectives,
               std::span<const std::uint8_t> x);

struct ParetoEntry {
  Point point;
  // Efficient solutions mapping onto `point`, ascending binary encoding.
  std::vector<BinaryVector> solutions;
};

// Non-dominated points in lexicographic order.
struct ParetoSet {
  std::vector<ParetoEntry> entries;

  std::vector<Point> points() const;
  // All efficient solutions, sorted by binary encoding.
  std::vector<BinaryVector> efficient_solutions() const;
};

// a dominates b (minimization): a <= b componentwise, strictly somewhere.
bool dominates(const Point& a, const Point& b);

// Points not dominated by any input point; duplicates collapsed, result
// sorted lexicographically.
std::vector<Point> nondominated_filter(std::span<const Point> points);

// Componentwise minimum. Throws std::invalid_argument on empty input.
Point ideal_point(std::span<const Point> points);

// Exact Lebesgue measure of the union of boxes [ref, s] over the points s
// with ref dominating s. Dimension sweep on the last coordinate.
BigInt hypervolume(std::span<const Point> points, const Point& ref);

// (sum c - sum d) / sum c for non-negative coefficient vectors.
Rational contraction_factor(const CoefficientVector& c,
                            const CoefficientVector& d);

// Encoding used by every enumeration: bit j of the index is x_j.
BinaryVector decode_binary(std::uint64_t index, std::size_t n);
std::uint64_t encode_binary(std::span<const std::uint8_t> x);

}  // namespace objcontract
