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

#include "objcontract/core.hpp"

#include <algorithm>
#include <stdexcept>

namespace objcontract {

std::string to_fixed(const Rational& q, int digits) {
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const bool negative = q < 0;
  const Rational mag = negative ? Rational(-q) : q;
  const BigInt num = boost::multiprecision::numerator(mag) * scale;
  const BigInt den = boost::multiprecision::denominator(mag);
  BigInt rounded = (2 * num + den) / (2 * den);
  std::string whole = BigInt(rounded / scale).str();
  std::string out = negative && rounded != 0 ? "-" + whole : whole;
  if (digits > 0) {
    std::string frac = BigInt(rounded % scale).str();
    frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
    out += "." + frac;
  }
  return out;
}

std::string_view to_string(SignClass s) {
  switch (s) {
    case SignClass::kAllPositive:
      return "all-positive";
    case SignClass::kContainsZero:
      return "contains-zero";
    case SignClass::kMixed:
      return "mixed";
  }
  return "?";
}

CoefficientVector::CoefficientVector(std::vector<std::int64_t> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw DimensionError("coefficient vector must have at least one entry");
  }
}

SignClass CoefficientVector::sign_class() const {
  bool zero = false;
  for (std::int64_t v : coeffs_) {
    if (v < 0) return SignClass::kMixed;
    if (v == 0) zero = true;
  }
  return zero ? SignClass::kContainsZero : SignClass::kAllPositive;
}

bool CoefficientVector::has_negative() const {
  return std::any_of(coeffs_.begin(), coeffs_.end(),
                     [](std::int64_t v) { return v < 0; });
}

std::int64_t CoefficientVector::evaluate(
    std::span<const std::uint8_t> x) const {
  if (x.size() != coeffs_.size()) {
    throw DimensionError("decision vector length does not match objective");
  }
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i]) sum = checked_add(sum, coeffs_[i]);
  }
  return sum;
}

ObjectiveMatrix::ObjectiveMatrix(std::vector<CoefficientVector> rows)
    : rows_(std::move(rows)) {
  if (rows_.empty()) {
    throw DimensionError("objective matrix needs at least one row");
  }
  for (const auto& r : rows_) {
    if (r.size() != rows_[0].size()) {
      throw DimensionError("objective rows have different lengths");
    }
  }
}

bool LinearConstraint::satisfied_by(std::span<const std::uint8_t> x) const {
  std::int64_t lhs = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i]) lhs = checked_add(lhs, coeffs[i]);
  }
  switch (sense) {
    case Sense::kLe:
      return lhs <= rhs;
    case Sense::kEq:
      return lhs == rhs;
    case Sense::kGe:
      return lhs >= rhs;
  }
  return false;
}

void Instance::validate() const {
  if (nvars == 0) throw DimensionError("instance needs at least one variable");
  if (nobjs == 0) throw DimensionError("instance needs at least one objective");
  if (objectives.num_objectives() != nobjs) {
    throw DimensionError("objective count does not match nobjs");
  }
  if (objectives.num_vars() != nvars) {
    throw DimensionError("objective length does not match nvars");
  }
  for (const auto& con : constraints) {
    if (con.coeffs.size() != nvars) {
      throw DimensionError("constraint length does not match nvars");
    }
  }
}

bool Instance::feasible(std::span<const std::uint8_t> x) const {
  return std::all_of(constraints.begin(), constraints.end(),
                     [&](const LinearConstraint& c) { return c.satisfied_by(x); });
}

Point evaluate(const ObjectiveMatrix& objectives,
               std::span<const std::uint8_t> x) {
  std::vector<std::int64_t> v;
  v.reserve(objectives.num_objectives());
  for (const auto& row : objectives.rows()) v.push_back(row.evaluate(x));
  return Point(std::move(v));
}

std::vector<Point> ParetoSet::points() const {
  std::vector<Point> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.point);
  return out;
}

std::vector<BinaryVector> ParetoSet::efficient_solutions() const {
  std::vector<BinaryVector> out;
  for (const auto& e : entries) {
    out.insert(out.end(), e.solutions.begin(), e.solutions.end());
  }
  std::sort(out.begin(), out.end(),
            [](const BinaryVector& a, const BinaryVector& b) {
              return encode_binary(a) < encode_binary(b);
            });
  return out;
}

bool dominates(const Point& a, const Point& b) {
  if (a.size() != b.size()) {
    throw DimensionError("dominance check on points of different dimension");
  }
  bool strict = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
    if (a[i] < b[i]) strict = true;
  }
  return strict;
}

std::vector<Point> nondominated_filter(std::span<const Point> points) {
  std::vector<Point> sorted(points.begin(), points.end());
  for (const auto& p : sorted) {
    if (p.size() != sorted.front().size()) {
      throw DimensionError("points of different dimension");
    }
  }
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  // A dominator is lexicographically smaller, so it is already in `front`
  // whenever it is itself non-dominated; dominated dominators are covered by
  // transitivity.
  std::vector<Point> front;
  for (auto& p : sorted) {
    const bool dominated = std::any_of(
        front.begin(), front.end(), [&](const Point& q) { return dominates(q, p); });
    if (!dominated) front.push_back(std::move(p));
  }
  return front;
}

Point ideal_point(std::span<const Point> points) {
  if (points.empty()) {
    throw std::invalid_argument("ideal point of an empty point set");
  }
  Point ideal = points.front();
  for (const auto& p : points) {
    if (p.size() != ideal.size()) {
      throw DimensionError("points of different dimension");
    }
    for (std::size_t i = 0; i < p.size(); ++i) {
      ideal.values[i] = std::min(ideal.values[i], p[i]);
    }
  }
  return ideal;
}

Rational contraction_factor(const CoefficientVector& c,
                            const CoefficientVector& d) {
  if (c.size() != d.size()) {
    throw DimensionError("contraction factor of vectors of different length");
  }
  BigInt sc = 0;
  BigInt sd = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] < 0 || d[i] < 0) {
      throw std::invalid_argument(
          "contraction factor is defined for non-negative coefficients");
    }
    sc += c[i];
    sd += d[i];
  }
  if (sc == 0) {
    throw std::domain_error("contraction factor with zero coefficient sum");
  }
  return Rational(sc - sd, sc);
}

BinaryVector decode_binary(std::uint64_t index, std::size_t n) {
  BinaryVector x(n, 0);
  for (std::size_t j = 0; j < n; ++j) x[j] = (index >> j) & 1U;
  return x;
}

std::uint64_t encode_binary(std::span<const std::uint8_t> x) {
  std::uint64_t idx = 0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j]) idx |= std::uint64_t{1} << j;
  }
  return idx;
}

}  // namespace objcontract
