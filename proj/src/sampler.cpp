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

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "objcontract/bench.hpp"

namespace objcontract {

std::string_view to_string(SamplerKind k) {
  switch (k) {
    case SamplerKind::kUniform:
      return "uniform";
    case SamplerKind::kOrderOfMagnitude:
      return "oom";
    case SamplerKind::kLogarithmic:
      return "log";
  }
  return "?";
}

SamplerKind parse_sampler_kind(std::string_view name) {
  if (name == "uniform") return SamplerKind::kUniform;
  if (name == "oom" || name == "order-of-magnitude") {
    return SamplerKind::kOrderOfMagnitude;
  }
  if (name == "log" || name == "logarithmic") return SamplerKind::kLogarithmic;
  throw std::invalid_argument("unknown sampler '" + std::string(name) + "'");
}

void SamplerSpec::validate() const {
  if (lo < 1 || lo >= hi) {
    throw std::invalid_argument("sampler range must satisfy 1 <= lo < hi");
  }
  if (hi > 1'000'000'000'000'000'000LL) {
    throw std::invalid_argument("sampler range upper end above 10^18");
  }
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t base,
                          std::initializer_list<std::uint64_t> coords) {
  std::uint64_t h = SplitMix64(base).next();
  for (std::uint64_t c : coords) h = SplitMix64(h ^ (c + 0x632BE59BD9B4E019ULL)).next();
  return h;
}

std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("uniform_int with empty range");
  const std::uint64_t range =
      static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1U;
  if (range == 0) return static_cast<std::int64_t>(rng());
  const std::uint64_t threshold = (0 - range) % range;
  while (true) {
    const std::uint64_t r = rng();
    if (r >= threshold) {
      return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + r % range);
    }
  }
}

double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<std::pair<std::int64_t, std::int64_t>> decades(std::int64_t lo,
                                                           std::int64_t hi) {
  SamplerSpec{SamplerKind::kOrderOfMagnitude, lo, hi, 0}.validate();
  std::int64_t p = 1;
  while (p <= lo / 10) p *= 10;
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  while (p <= hi) {
    const std::int64_t top = p > hi / 10 ? hi : std::min(hi, p * 10 - 1);
    out.emplace_back(std::max(lo, p), top);
    if (p > hi / 10) break;
    p *= 10;
  }
  if (out.size() > 1 && out.back().first == out.back().second &&
      out.back().first == p) {
    out.pop_back();
    out.back().second = hi;
  }
  return out;
}

CoefficientVector sample(const SamplerSpec& spec, std::size_t n) {
  spec.validate();
  if (n == 0) throw std::invalid_argument("sample size must be positive");
  std::mt19937_64 rng(spec.seed);
  std::vector<std::int64_t> values(n);
  switch (spec.kind) {
    case SamplerKind::kUniform:
      for (auto& v : values) v = uniform_int(rng, spec.lo, spec.hi);
      break;
    case SamplerKind::kOrderOfMagnitude: {
      const auto ds = decades(spec.lo, spec.hi);
      for (auto& v : values) {
        const auto& [a, b] =
            ds[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(ds.size()) - 1))];
        v = uniform_int(rng, a, b);
      }
      break;
    }
    case SamplerKind::kLogarithmic: {
      const double lo = std::log(static_cast<double>(spec.lo));
      const double hi = std::log(static_cast<double>(spec.hi));
      for (auto& v : values) {
        const double x = std::exp(lo + uniform_unit(rng) * (hi - lo));
        v = std::clamp<std::int64_t>(std::llround(x), spec.lo, spec.hi);
      }
      break;
    }
  }
  return CoefficientVector(std::move(values));
}

}  // namespace objcontract
