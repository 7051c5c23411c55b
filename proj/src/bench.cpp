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
#include <atomic>
#include <cstdio>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "objcontract/bench.hpp"
#include "objcontract/enumeration.hpp"

namespace objcontract {
namespace {

struct Cell {
  std::size_t sampler_pos;
  SamplerKind sampler;
  std::size_t n;
  int k;
  std::size_t sample;
};

std::int64_t pow10(int k) {
  std::int64_t v = 1;
  for (int i = 0; i < k; ++i) v *= 10;
  return v;
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

StudyRecord run_cell(const Cell& cell, const StudyGrid& grid,
                     const ContractionConfig& config, bool verify) {
  StudyRecord rec;
  rec.sampler = cell.sampler;
  rec.n = cell.n;
  rec.k = cell.k;
  rec.range_hi = pow10(cell.k);
  rec.sample_index = cell.sample;
  const SamplerSpec spec{
      cell.sampler, 1, rec.range_hi,
      derive_seed(grid.seed, {static_cast<std::uint64_t>(cell.sampler), cell.n,
                              static_cast<std::uint64_t>(cell.k), cell.sample})};
  rec.c = sample(spec, cell.n);
  const auto start = std::chrono::steady_clock::now();
  const ContractionResult res = contract_objective(rec.c, config);
  rec.runtime_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  rec.gamma = res.gamma;
  rec.status = res.status;
  rec.cuts = res.cuts_added;
  rec.d = res.d;
  if (verify && rec.status == ContractionStatus::kOptimal && rec.n <= kSignatureCap &&
      !verify_order_preserving(rec.c, rec.d).empty()) {
    throw InternalError("contracted coefficients fail the order check");
  }
  return rec;
}

SummaryGroup make_group(std::string key, const std::vector<const StudyRecord*>& recs) {
  SummaryGroup g;
  g.key = std::move(key);
  g.count = recs.size();
  std::vector<double> runtime, gamma;
  for (const auto* r : recs) {
    runtime.push_back(r->runtime_ms);
    gamma.push_back(Rational(100 * r->gamma).convert_to<double>());
    if (r->status == ContractionStatus::kOptimal) ++g.contractable;
  }
  g.runtime_ms = quantiles(runtime);
  g.gamma_pct = quantiles(gamma);
  return g;
}

}  // namespace

void StudyGrid::validate() const {
  if (samplers.empty() || n_values.empty() || k_values.empty() ||
      samples_per_cell == 0) {
    throw std::invalid_argument("study grid has an empty dimension");
  }
  for (auto n : n_values) {
    if (n == 0) throw std::invalid_argument("n values must be positive");
  }
  for (int k : k_values) {
    if (k < 1 || k > 18) throw std::invalid_argument("k values must lie in [1, 18]");
  }
}

std::size_t StudyGrid::size() const {
  return samplers.size() * n_values.size() * k_values.size() * samples_per_cell;
}

std::vector<StudyRecord> run_study(const StudyGrid& grid,
                                   const ContractionConfig& config,
                                   const StudyOptions& options) {
  grid.validate();
  config.validate();
  std::vector<Cell> cells;
  for (std::size_t s = 0; s < grid.samplers.size(); ++s) {
    for (auto n : grid.n_values) {
      for (int k : grid.k_values) {
        for (std::size_t i = 0; i < grid.samples_per_cell; ++i) {
          cells.push_back({s, grid.samplers[s], n, k, i});
        }
      }
    }
  }
  std::vector<StudyRecord> records(cells.size());
  std::vector<std::exception_ptr> errors(cells.size());
  std::atomic<std::size_t> next{0};
  std::mutex report_mutex;
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < cells.size();) {
      try {
        records[i] = run_cell(cells[i], grid, config, options.verify);
        if (options.on_record) {
          std::lock_guard lock(report_mutex);
          options.on_record(records[i]);
        }
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(options.workers, 1, cells.size());
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return records;
}

std::string to_csv(const std::vector<StudyRecord>& records) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& r : records) {
    out += std::string(to_string(r.sampler)) + ',' + std::to_string(r.n) + ',' +
           std::to_string(r.k) + ',' + std::to_string(r.sample_index) + ',' +
           fixed(r.runtime_ms, 3) + ',' + to_fixed(100 * r.gamma, 4) + ',' +
           std::string(to_string(r.status)) + ',' + std::to_string(r.cuts) + '\n';
  }
  return out;
}

double quantile(std::vector<double> values, double q) {
  if (values.empty()) throw std::invalid_argument("quantile of an empty sample");
  std::sort(values.begin(), values.end());
  const double pos = q * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(pos);
  const std::size_t hi = std::min(lo + 1, values.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return values[lo] + frac * (values[hi] - values[lo]);
}

Quantiles quantiles(const std::vector<double>& values) {
  return {quantile(values, 0.0), quantile(values, 0.25), quantile(values, 0.5),
          quantile(values, 0.75), quantile(values, 1.0)};
}

StudySummary summarize(const std::vector<StudyRecord>& records) {
  if (records.empty()) throw std::invalid_argument("summary of an empty study");
  StudySummary s;
  std::map<std::size_t, std::vector<const StudyRecord*>> by_n;
  std::map<SamplerKind, std::vector<const StudyRecord*>> by_sampler;
  for (const auto& r : records) {
    by_n[r.n].push_back(&r);
    by_sampler[r.sampler].push_back(&r);
  }
  for (const auto& [n, recs] : by_n) {
    s.by_n.push_back(make_group("n=" + std::to_string(n), recs));
  }
  for (const auto& [kind, recs] : by_sampler) {
    s.by_sampler.push_back(make_group("sampler=" + std::string(to_string(kind)), recs));
  }
  s.csv = to_csv(records);
  return s;
}

std::string format_summary(const StudySummary& summary) {
  std::ostringstream os;
  auto section = [&](const char* title, const std::vector<SummaryGroup>& groups) {
    os << title << '\n';
    os << "group            count  contractable  gamma%[min q1 med q3 max]"
          "                  runtime_ms[med max]\n";
    for (const auto& g : groups) {
      char line[256];
      std::snprintf(line, sizeof line,
                    "%-16s %5zu  %12zu  %6.2f %6.2f %6.2f %6.2f %6.2f     %10.3f %10.3f\n",
                    g.key.c_str(), g.count, g.contractable, g.gamma_pct.min,
                    g.gamma_pct.q1, g.gamma_pct.median, g.gamma_pct.q3,
                    g.gamma_pct.max, g.runtime_ms.median, g.runtime_ms.max);
      os << line;
    }
  };
  section("# by n", summary.by_n);
  section("# by sampler", summary.by_sampler);
  return os.str();
}

}  // namespace objcontract
