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

// Randomized contraction study: coefficient samplers, a timed grid runner
// and quantile summaries.
//
// Reproducibility: every sample is drawn from std::mt19937_64 (whose output
// sequence is fixed by the C++ standard) seeded with a SplitMix64 hash of
// (base seed, sampler, n, k, sample index). Integer draws use rejection
// sampling on raw 64-bit outputs, never std::uniform_int_distribution.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "objcontract/contraction.hpp"

namespace objcontract {

enum class SamplerKind { kUniform, kOrderOfMagnitude, kLogarithmic };

// Canonical short names: "uniform", "oom", "log".
std::string_view to_string(SamplerKind k);
// Accepts the short names and "order-of-magnitude" / "logarithmic".
SamplerKind parse_sampler_kind(std::string_view name);

struct SamplerSpec {
  SamplerKind kind = SamplerKind::kUniform;
  std::int64_t lo = 1;
  std::int64_t hi = 1000;
  std::uint64_t seed = 0;

  void validate() const;  // 1 <= lo < hi
};

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}
  std::uint64_t next();

 private:
  std::uint64_t state_;
};

std::uint64_t derive_seed(std::uint64_t base,
                          std::initializer_list<std::uint64_t> coords);

// Unbiased integer in [lo, hi].
std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi);
// Uniform double in [0, 1) from the top 53 bits.
double uniform_unit(std::mt19937_64& rng);

// Decade intervals [10^j, 10^(j+1) - 1] intersected with [lo, hi]. A
// trailing singleton {hi} with hi a power of ten is folded into the decade
// below it, so (1, 10^k) has exactly k decades.
std::vector<std::pair<std::int64_t, std::int64_t>> decades(std::int64_t lo,
                                                           std::int64_t hi);

CoefficientVector sample(const SamplerSpec& spec, std::size_t n);

struct StudyGrid {
  std::vector<SamplerKind> samplers;
  std::vector<std::size_t> n_values;
  std::vector<int> k_values;  // range (1, 10^k)
  std::size_t samples_per_cell = 5;
  std::uint64_t seed = 0;

  void validate() const;
  std::size_t size() const;
};

struct StudyRecord {
  SamplerKind sampler = SamplerKind::kUniform;
  std::size_t n = 0;
  int k = 0;
  std::int64_t range_hi = 0;
  std::size_t sample_index = 0;
  double runtime_ms = 0.0;
  Rational gamma;
  ContractionStatus status = ContractionStatus::kNonContractable;
  std::size_t cuts = 0;
  CoefficientVector c;
  CoefficientVector d;
};

struct StudyOptions {
  std::size_t workers = 1;
  // Re-check every optimal d against its c by full enumeration when
  // n <= kSignatureCap.
  bool verify = true;
  std::function<void(const StudyRecord&)> on_record;
};

// One record per (sampler, n, k, sample), in that nesting order.
std::vector<StudyRecord> run_study(const StudyGrid& grid,
                                   const ContractionConfig& config,
                                   const StudyOptions& options = {});

inline constexpr std::string_view kCsvHeader =
    "sampler,n,k,sample,runtime_ms,gamma_pct,status,cuts";

std::string to_csv(const std::vector<StudyRecord>& records);

struct Quantiles {
  double min = 0, q1 = 0, median = 0, q3 = 0, max = 0;
};

// Linear interpolation between order statistics. Throws on empty input.
double quantile(std::vector<double> values, double q);
Quantiles quantiles(const std::vector<double>& values);

struct SummaryGroup {
  std::string key;  // "n=7" or "sampler=oom"
  std::size_t count = 0;
  std::size_t contractable = 0;  // status optimal
  Quantiles runtime_ms;
  Quantiles gamma_pct;
};

struct StudySummary {
  std::vector<SummaryGroup> by_n;
  std::vector<SummaryGroup> by_sampler;
  std::string csv;
};

StudySummary summarize(const std::vector<StudyRecord>& records);
std::string format_summary(const StudySummary& summary);

}  // namespace objcontract
