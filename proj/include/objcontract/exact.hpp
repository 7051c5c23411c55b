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

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace objcontract {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A hard enumeration limit was hit; the caller must shrink the input.
class CapExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a solver self-check fails. Never expected on valid input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("int64 overflow in coefficient arithmetic");
  }
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("int64 overflow in coefficient arithmetic");
  }
  return r;
}

// Largest magnitude any signed subset sum of `values` can reach.
// Throws when that bound leaves no headroom in 64 bits.
inline std::int64_t checked_abs_sum(std::span<const std::int64_t> values) {
  constexpr std::int64_t kLimit = std::numeric_limits<std::int64_t>::max() / 4;
  std::int64_t total = 0;
  for (std::int64_t v : values) {
    if (v == std::numeric_limits<std::int64_t>::min()) {
      throw std::overflow_error("coefficient magnitude out of range");
    }
    total = checked_add(total, v < 0 ? -v : v);
    if (total > kLimit) {
      throw std::overflow_error("coefficient sums exceed the exact 64-bit range");
    }
  }
  return total;
}

inline std::string to_string(const Rational& q) {
  return q.str();
}

// Decimal rendering with a fixed number of fractional digits, rounded half
// away from zero. Exact; no floating point is involved.
std::string to_fixed(const Rational& q, int digits);

}  // namespace objcontract
