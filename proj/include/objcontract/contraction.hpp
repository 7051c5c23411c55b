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

// Exact objective contraction: find the integer vector d with minimal
// coefficient sum whose subset sums order {0,1}^n exactly as c does.
// Solved by a cutting-plane loop: a branch-and-bound master over the rows
// found so far, and two separation oracles that either return a violated
// row or certify the master solution.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "objcontract/core.hpp"
#include "objcontract/ip_kernel.hpp"

namespace objcontract {

enum class SignedMode { kReject, kSplit };

struct ContractionConfig {
  std::chrono::duration<double> time_limit{600.0};
  std::size_t max_cuts = 1'000'000;
  SignedMode signed_mode = SignedMode::kReject;
  bool emit_trace = false;
  MasterOptions master;  // deadline is overwritten per run

  void validate() const;
};

enum class ContractionStatus { kOptimal, kTimeoutIncumbent, kNonContractable };

std::string_view to_string(ContractionStatus s);

struct TracePoint {
  std::size_t iteration = 0;
  std::int64_t incumbent_objective = 0;  // best OCPset-feasible sum so far
  std::int64_t lower_bound = 0;          // master optimum
};

// One separation event: the row and the master solution it cut off, both in
// the sorted core index space.
struct CutEvent {
  CutRow row;
  std::vector<std::int64_t> master_solution;
};

struct ContractionResult {
  CoefficientVector d;  // original variable order
  ContractionStatus status = ContractionStatus::kNonContractable;
  Rational gamma;
  std::size_t cuts_added = 0;
  std::size_t iterations = 0;
  std::chrono::duration<double> elapsed{0.0};
  std::optional<std::vector<TracePoint>> trace;
  std::vector<CutEvent> cut_log;
};

struct Preprocessed {
  // Nonzero coefficients, ascending by value.
  std::vector<std::int64_t> core;
  // core[k] comes from input position positions[k].
  std::vector<std::size_t> positions;
  // Input positions sharing one value; only classes of size >= 2.
  std::vector<std::vector<std::size_t>> tie_classes;
  std::vector<std::size_t> zero_positions;
  // -1 / 0 / +1 per input position.
  std::vector<std::int8_t> sign_mask;

  std::vector<std::int64_t> magnitudes() const;
};

Preprocessed preprocess(const CoefficientVector& c);

// Adjacent-pair rows over an ascending vector: equality for equal neighbours,
// d_i + 1 <= d_{i+1} otherwise.
std::vector<CutRow> initial_rows(std::span<const std::int64_t> sorted_c);

// Oracle A, then oracle B when A certifies no positive gain. Returns a row
// violated by d, or nothing when d is feasible for every disjoint-pair row.
std::optional<CutRow> separate(std::span<const std::int64_t> sorted_c,
                               std::span<const std::int64_t> d);

ContractionResult contract_objective(const CoefficientVector& c,
                                     const ContractionConfig& config = {});

// Mixed-sign contraction with d_i = p_i - n_i and objective sum(p_i + n_i).
// Requires config.signed_mode == kSplit.
ContractionResult contract_signed(const CoefficientVector& c,
                                  const ContractionConfig& config);

// Contracts each objective independently; constraints are copied through.
// `workers` > 1 runs objectives concurrently.
std::pair<Instance, std::vector<ContractionResult>> contract_instance(
    const Instance& instance, const ContractionConfig& config = {},
    std::size_t workers = 1);

}  // namespace objcontract
