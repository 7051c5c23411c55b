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

#include "objcontract/contraction.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

namespace objcontract {
namespace {

using Clock = std::chrono::steady_clock;

std::int8_t sign_of(std::int64_t v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Master variables are magnitudes e_k = |d_k| >= 1; a row over d is rewritten
// by moving every negative-signed index to the opposite side.
CutRow to_master_space(const CutRow& row, std::span<const std::int8_t> signs) {
  std::vector<std::uint32_t> plus, minus;
  for (auto k : row.plus) (signs[k] > 0 ? plus : minus).push_back(k);
  for (auto k : row.minus) (signs[k] > 0 ? minus : plus).push_back(k);
  return row.sense == RowSense::kStrict ? CutRow::strict(std::move(minus), std::move(plus))
                                        : CutRow::equal(std::move(minus), std::move(plus));
}

Rational magnitude_gamma(const CoefficientVector& c, const CoefficientVector& d) {
  if (!c.has_negative() && !d.has_negative()) return contraction_factor(c, d);
  BigInt sc = 0, sd = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    sc += c[i] < 0 ? -c[i] : c[i];
    sd += d[i] < 0 ? -d[i] : d[i];
  }
  return Rational(sc - sd, sc);
}

ContractionResult run_cutting_planes(const CoefficientVector& c,
                                     const ContractionConfig& config) {
  const auto start = Clock::now();
  const auto deadline =
      start + std::chrono::duration_cast<Clock::duration>(config.time_limit);
  checked_abs_sum(c.values());

  const Preprocessed pre = preprocess(c);
  const std::size_t n = pre.core.size();
  ContractionResult result;
  result.d = c;
  result.status = ContractionStatus::kNonContractable;
  result.gamma = 0;
  if (config.emit_trace) result.trace.emplace();

  if (n == 0) {
    result.elapsed = Clock::now() - start;
    return result;
  }

  std::vector<std::int8_t> signs(n);
  std::vector<std::int64_t> magnitudes = pre.magnitudes();
  for (std::size_t k = 0; k < n; ++k) signs[k] = sign_of(pre.core[k]);
  const std::int64_t bound = *std::max_element(magnitudes.begin(), magnitudes.end());
  const std::int64_t start_objective =
      std::accumulate(magnitudes.begin(), magnitudes.end(), std::int64_t{0});

  MasterModel model;
  model.nvars = n;
  model.lower.assign(n, 1);
  model.upper.assign(n, bound);
  std::set<CutRow> seen;
  for (const auto& row : initial_rows(pre.core)) {
    CutRow m = to_master_space(row, signs);
    if (seen.insert(m).second) model.rows.push_back(std::move(m));
  }

  MasterOptions master_options = config.master;
  master_options.deadline = deadline;
  std::vector<std::int64_t> d_core(n);
  bool solved = false;

  while (true) {
    if (Clock::now() >= deadline || result.cuts_added >= config.max_cuts) break;
    ++result.iterations;
    const MasterResult master =
        solve_master(model, std::span<const std::int64_t>(magnitudes), master_options);
    if (master.status == MasterStatus::kTimeLimit) break;
    if (master.status == MasterStatus::kInfeasible) {
      throw InternalError("contraction master became infeasible");
    }
    // Rows are only added, so this optimum bounds every later one.
    master_options.objective_floor = master.objective;
    for (std::size_t k = 0; k < n; ++k) d_core[k] = signs[k] * master.values[k];
    if (result.trace) {
      result.trace->push_back({result.iterations, start_objective, master.objective});
    }
    auto row = separate(pre.core, d_core);
    if (!row) {
      solved = true;
      if (result.trace) {
        result.trace->push_back(
            {result.iterations, master.objective, master.objective});
      }
      break;
    }
    CutRow m = to_master_space(*row, signs);
    if (m.satisfied_by(master.values)) {
      throw InternalError("separated row does not cut off the master solution");
    }
    if (!seen.insert(m).second) {
      throw InternalError("separation repeated a row: " + m.describe());
    }
    result.cut_log.push_back({m, master.values});
    model.rows.push_back(std::move(m));
    ++result.cuts_added;
  }

  if (solved) {
    std::vector<std::int64_t> d(c.size(), 0);
    for (std::size_t k = 0; k < n; ++k) d[pre.positions[k]] = d_core[k];
    result.d = CoefficientVector(std::move(d));
    if (result.d == c) {
      result.status = ContractionStatus::kNonContractable;
      result.gamma = 0;
    } else {
      result.status = ContractionStatus::kOptimal;
      result.gamma = magnitude_gamma(c, result.d);
    }
  } else {
    result.status = ContractionStatus::kTimeoutIncumbent;
  }
  result.elapsed = Clock::now() - start;
  return result;
}

}  // namespace

void ContractionConfig::validate() const {
  if (!(time_limit.count() > 0)) {
    throw std::invalid_argument("time limit must be positive");
  }
  if (max_cuts == 0) throw std::invalid_argument("max_cuts must be positive");
}

std::string_view to_string(ContractionStatus s) {
  switch (s) {
    case ContractionStatus::kOptimal:
      return "optimal";
    case ContractionStatus::kTimeoutIncumbent:
      return "timeout-incumbent";
    case ContractionStatus::kNonContractable:
      return "non-contractable";
  }
  return "?";
}

std::vector<std::int64_t> Preprocessed::magnitudes() const {
  std::vector<std::int64_t> m(core.size());
  std::transform(core.begin(), core.end(), m.begin(),
                 [](std::int64_t v) { return v < 0 ? -v : v; });
  return m;
}

Preprocessed preprocess(const CoefficientVector& c) {
  Preprocessed p;
  p.sign_mask.resize(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    p.sign_mask[i] = sign_of(c[i]);
    if (c[i] == 0) {
      p.zero_positions.push_back(i);
    } else {
      p.positions.push_back(i);
    }
  }
  std::stable_sort(p.positions.begin(), p.positions.end(),
                   [&](std::size_t a, std::size_t b) { return c[a] < c[b]; });
  for (std::size_t k = 0; k < p.positions.size();) {
    std::size_t j = k;
    while (j + 1 < p.positions.size() && c[p.positions[j + 1]] == c[p.positions[k]]) ++j;
    if (j > k) {
      std::vector<std::size_t> cls(p.positions.begin() + static_cast<long>(k),
                                   p.positions.begin() + static_cast<long>(j) + 1);
      std::sort(cls.begin(), cls.end());
      p.tie_classes.push_back(std::move(cls));
    }
    k = j + 1;
  }
  for (auto pos : p.positions) p.core.push_back(c[pos]);
  return p;
}

std::vector<CutRow> initial_rows(std::span<const std::int64_t> sorted_c) {
  std::vector<CutRow> rows;
  for (std::size_t i = 0; i + 1 < sorted_c.size(); ++i) {
    const auto a = static_cast<std::uint32_t>(i);
    if (sorted_c[i] > sorted_c[i + 1]) {
      throw std::invalid_argument("initial_rows expects ascending coefficients");
    }
    rows.push_back(sorted_c[i] == sorted_c[i + 1] ? CutRow::equal({a}, {a + 1})
                                                  : CutRow::strict({a}, {a + 1}));
  }
  return rows;
}

std::optional<CutRow> separate(std::span<const std::int64_t> sorted_c,
                               std::span<const std::int64_t> d) {
  std::optional<CutRow> row;
  const OracleSolution a = oracle_a(sorted_c, d);
  if (a.dsum > 0) {
    row = a.csum == 0 ? CutRow::equal(a.s_side(), a.t_side())
                      : CutRow::strict(a.s_side(), a.t_side());
  } else {
    const OracleSolution b = oracle_b(sorted_c, d);
    if (b.csum < 0) row = CutRow::strict(b.s_side(), b.t_side());
  }
  if (row && row->satisfied_by(d)) {
    throw InternalError("oracle returned a row the candidate satisfies");
  }
  return row;
}

ContractionResult contract_objective(const CoefficientVector& c,
                                     const ContractionConfig& config) {
  config.validate();
  if (c.has_negative()) {
    if (config.signed_mode == SignedMode::kReject) {
      throw std::invalid_argument(
          "objective has negative coefficients; use signed mode 'split'");
    }
    return contract_signed(c, config);
  }
  return run_cutting_planes(c, config);
}

ContractionResult contract_signed(const CoefficientVector& c,
                                  const ContractionConfig& config) {
  config.validate();
  if (config.signed_mode != SignedMode::kSplit) {
    throw std::invalid_argument("signed contraction requires signed mode 'split'");
  }
  return run_cutting_planes(c, config);
}

std::pair<Instance, std::vector<ContractionResult>> contract_instance(
    const Instance& instance, const ContractionConfig& config, std::size_t workers) {
  instance.validate();
  config.validate();
  const std::size_t p = instance.nobjs;
  std::vector<ContractionResult> results(p);
  std::vector<std::exception_ptr> errors(p);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < p;) {
      try {
        results[i] = contract_objective(instance.objectives.row(i), config);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::min(std::max<std::size_t>(workers, 1), p);
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  Instance out = instance;
  std::vector<CoefficientVector> rows;
  for (const auto& r : results) rows.push_back(r.d);
  out.objectives = ObjectiveMatrix(std::move(rows));
  return {std::move(out), std::move(results)};
}

}  // namespace objcontract
