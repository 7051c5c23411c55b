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

// Heuristic coefficient transformations: uniform scaling by the gcd, the
// scale-and-round heuristic and independent row scaling.

#include <cstdint>
#include <optional>
#include <span>

#include "objcontract/core.hpp"

namespace objcontract {

struct ScaleReport {
  CoefficientVector d;
  Rational lambda;  // applied factor, d ~ lambda * c
  // Order-preserving? Unknown when the input is beyond the signature cap.
  std::optional<bool> exact;
};

// d = c / gcd(|c|). Always exact.
ScaleReport gcd_scale(const CoefficientVector& c);

// d_j = ceil(c_j / divisor) for positive c. Lossy in general.
ScaleReport scale_round(const CoefficientVector& c, std::int64_t divisor);
// Divisor 10^k.
ScaleReport scale_round_pow10(const CoefficientVector& c, int k);
// d_j = ceil(lambda * c_j); lambda > 0. Covers the fractional-to-integer use.
ScaleReport scale_round(const CoefficientVector& c, const Rational& lambda);

// Row i multiplied by factors[i]. Throws std::invalid_argument on a
// non-positive factor or a non-integral product.
ObjectiveMatrix row_scale(const ObjectiveMatrix& m,
                          std::span<const Rational> factors);

}  // namespace objcontract
