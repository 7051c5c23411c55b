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

#include "objcontract/scaling.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

#include "objcontract/enumeration.hpp"

namespace objcontract {
namespace {

std::optional<bool> order_preserving(const CoefficientVector& c,
                                     const CoefficientVector& d) {
  if (c.size() > kSignatureCap) return std::nullopt;
  return verify_order_preserving(c, d).empty();
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
  // b > 0
  BigInt q = a / b;
  if (a % b != 0 && a > 0) ++q;
  return q;
}

std::int64_t to_int64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("scaled coefficient out of 64-bit range");
  }
  return v.convert_to<std::int64_t>();
}

}  // namespace

ScaleReport gcd_scale(const CoefficientVector& c) {
  std::int64_t g = 0;
  for (std::int64_t v : c.values()) g = std::gcd(g, v);
  if (g == 0) throw std::invalid_argument("gcd scaling of an all-zero vector");
  std::vector<std::int64_t> d(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) d[i] = c[i] / g;
  return {CoefficientVector(std::move(d)), Rational(1, g), true};
}

ScaleReport scale_round(const CoefficientVector& c, std::int64_t divisor) {
  if (divisor <= 0) throw std::invalid_argument("divisor must be positive");
  return scale_round(c, Rational(1, divisor));
}

ScaleReport scale_round_pow10(const CoefficientVector& c, int k) {
  if (k < 0 || k > 18) throw std::invalid_argument("k must lie in [0, 18]");
  std::int64_t divisor = 1;
  for (int i = 0; i < k; ++i) divisor *= 10;
  return scale_round(c, divisor);
}

ScaleReport scale_round(const CoefficientVector& c, const Rational& lambda) {
  if (lambda <= 0) throw std::invalid_argument("scale factor must be positive");
  for (std::int64_t v : c.values()) {
    if (v <= 0) {
      throw std::invalid_argument("scale-and-round expects positive coefficients");
    }
  }
  const BigInt num = boost::multiprecision::numerator(lambda);
  const BigInt den = boost::multiprecision::denominator(lambda);
  std::vector<std::int64_t> d(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    d[i] = to_int64(ceil_div(num * c[i], den));
  }
  CoefficientVector dv(std::move(d));
  auto exact = order_preserving(c, dv);
  return {std::move(dv), lambda, exact};
}

ObjectiveMatrix row_scale(const ObjectiveMatrix& m,
                          std::span<const Rational> factors) {
  if (factors.size() != m.num_objectives()) {
    throw DimensionError("one scale factor per objective row is required");
  }
  std::vector<CoefficientVector> rows;
  for (std::size_t r = 0; r < m.num_objectives(); ++r) {
    const Rational& f = factors[r];
    if (f <= 0) throw std::invalid_argument("row scale factor must be positive");
    std::vector<std::int64_t> row(m.num_vars());
    for (std::size_t j = 0; j < m.num_vars(); ++j) {
      const Rational v = f * m.row(r)[j];
      if (boost::multiprecision::denominator(v) != 1) {
        throw std::invalid_argument("row scaling produced a non-integral coefficient");
      }
      row[j] = to_int64(boost::multiprecision::numerator(v));
    }
    rows.emplace_back(std::move(row));
  }
  return ObjectiveMatrix(std::move(rows));
}

}  // namespace objcontract
