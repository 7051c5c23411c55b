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
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "objcontract/ip_kernel.hpp"
#include "lp_bound.hpp"

namespace objcontract {
namespace {

std::vector<std::uint32_t> sorted(std::vector<std::uint32_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// sum(pos) - sum(neg) >= rhs, attached to its highest-index variable.
struct Inequality {
  std::vector<std::uint32_t> pos;
  std::vector<std::uint32_t> neg;
  std::int64_t rhs = 0;
  std::uint32_t last = 0;
  bool last_pos = false;
};

// Slack granted to floating-point relaxation values before they may prune an
// integer cutoff.
double lp_tolerance(std::int64_t cutoff) {
  return 1e-6 + 1e-9 * std::abs(static_cast<double>(cutoff));
}

class BranchAndBound {
 public:
  BranchAndBound(const MasterModel& model, const MasterOptions& options)
      : model_(model),
        options_(options),
        closing_(model.nvars),
        lo_(model.lower),
        hi_(model.upper) {
    for (const auto& row : model.rows) {
      add(row.plus, row.minus, row.sense == RowSense::kStrict ? 1 : 0);
      if (row.sense == RowSense::kEqual) add(row.minus, row.plus, 0);
    }
    std::vector<detail::LpRow> lp_rows;
    for (const auto& q : rows_) lp_rows.push_back({q.pos, q.neg, q.rhs});
    lp_.emplace(model.nvars, std::move(lp_rows));
    vals_.assign(model.nvars, 0);
    root_ = lp_->solve(lo_, hi_, root_basis_);
  }

  // Valid lower bound on every integer solution; +inf when the relaxation is
  // already infeasible.
  double root_bound() const {
    return root_.infeasible || infeasible_ ? HUGE_VAL : root_.value;
  }

  // Searches for assignments with objective <= cutoff. With `first_only`
  // the search stops at the first leaf; otherwise the cutoff tightens after
  // each leaf and the search also stops once `floor` is reached.
  void run(std::int64_t cutoff, bool first_only, std::int64_t floor) {
    cutoff_ = cutoff;
    first_only_ = first_only;
    floor_ = floor;
    done_ = false;
    if (root_.infeasible || infeasible_) return;
    search(0, 0, root_, root_basis_);
  }

  bool found() const { return found_; }
  bool timed_out() const { return timed_out_; }
  const std::vector<std::int64_t>& best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void add(const std::vector<std::uint32_t>& pos,
           const std::vector<std::uint32_t>& neg, std::int64_t rhs) {
    Inequality q{pos, neg, rhs};
    std::int64_t top = -1;
    for (auto v : pos) top = std::max<std::int64_t>(top, v);
    for (auto v : neg) top = std::max<std::int64_t>(top, v);
    if (top < 0) {
      if (rhs > 0) infeasible_ = true;
      return;
    }
    q.last = static_cast<std::uint32_t>(top);
    q.last_pos = std::find(pos.begin(), pos.end(), q.last) != pos.end();
    closing_[q.last].push_back(rows_.size());
    rows_.push_back(std::move(q));
  }

  bool out_of_time() {
    if (timed_out_) return true;
    if (options_.deadline && (nodes_ & 63U) == 0 &&
        std::chrono::steady_clock::now() >= *options_.deadline) {
      timed_out_ = true;
    }
    return timed_out_;
  }

  bool pruned(const detail::LpResult& r) const {
    return r.infeasible || r.value > static_cast<double>(cutoff_) + lp_tolerance(cutoff_);
  }

  // Variables 0..m-1 are fixed in vals_ (and in lo_/hi_); `parent` is the
  // relaxation at this node. Values of variable m are tried in increasing
  // order so that the first leaf reached at any cutoff is the
  // lexicographically smallest one within it.
  void search(std::size_t m, std::int64_t sum, const detail::LpResult& parent,
              const std::vector<std::uint32_t>& parent_basis) {
    ++nodes_;
    if (out_of_time() || done_) return;
    const std::size_t n = model_.nvars;
    if (m == n) {
      best_ = vals_;
      found_ = true;
      cutoff_ = sum - 1;
      if (first_only_ || sum <= floor_) done_ = true;
      return;
    }
    // Rows closed by variable m are exact integer bounds on it.
    std::int64_t lo = model_.lower[m];
    std::int64_t hi = model_.upper[m];
    for (auto r : closing_[m]) {
      const Inequality& q = rows_[r];
      std::int64_t act = 0;
      for (auto v : q.pos) {
        if (v != m) act += vals_[v];
      }
      for (auto v : q.neg) {
        if (v != m) act -= vals_[v];
      }
      if (q.last_pos) {
        lo = std::max(lo, q.rhs - act);
      } else {
        hi = std::min(hi, act - q.rhs);
      }
    }
    if (lo > hi) return;

    std::vector<std::uint32_t> basis;
    auto relax = [&](std::int64_t v) {
      lo_[m] = hi_[m] = v;
      basis = parent_basis;
      return lp_->solve(lo_, hi_, basis);
    };

    // The relaxation value as a function of x_m is convex with its minimum
    // at the parent's x_m, so below that point feasibility under the cutoff
    // is monotone and the first admissible value can be bisected.
    const bool convex = parent.exact;
    const double argmin = convex ? parent.x[m] : 0.0;
    std::int64_t first = lo;
    if (convex && static_cast<double>(lo) < argmin) {
      std::int64_t b = hi;
      if (argmin < static_cast<double>(hi)) b = static_cast<std::int64_t>(std::floor(argmin + 1e-9));
      if (b > lo && pruned(relax(b))) {
        first = b + 1;
      } else if (b > lo) {
        std::int64_t a = lo;  // invariant: answer in [a, b], b admissible
        while (a < b) {
          const std::int64_t mid = a + (b - a) / 2;
          if (pruned(relax(mid))) {
            a = mid + 1;
          } else {
            b = mid;
          }
        }
        first = a;
      }
    }
    for (std::int64_t v = first; v <= hi; ++v) {
      const detail::LpResult child = relax(v);
      if (pruned(child)) {
        if (convex && static_cast<double>(v) >= argmin - 1e-9) break;
        continue;
      }
      vals_[m] = v;
      const std::vector<std::uint32_t> child_basis = basis;
      search(m + 1, sum + v, child, child_basis);
      if (timed_out_ || done_) break;
    }
    lo_[m] = model_.lower[m];
    hi_[m] = model_.upper[m];
  }

  const MasterModel& model_;
  const MasterOptions& options_;
  std::vector<Inequality> rows_;
  std::vector<std::vector<std::size_t>> closing_;
  std::optional<detail::LpBound> lp_;
  detail::LpResult root_;
  std::vector<std::uint32_t> root_basis_;
  std::vector<std::int64_t> lo_, hi_;
  std::vector<std::int64_t> vals_;
  std::vector<std::int64_t> best_;
  std::int64_t cutoff_ = 0;
  std::int64_t floor_ = 0;
  bool first_only_ = false;
  bool done_ = false;
  bool infeasible_ = false;
  bool found_ = false;
  bool timed_out_ = false;
  std::uint64_t nodes_ = 0;
};

// Levels tried one by one above the floor before switching to a plain
// branch and bound under the incumbent cutoff.
constexpr int kDeepeningLevels = 24;

}  // namespace

CutRow CutRow::strict(std::vector<std::uint32_t> minus,
                      std::vector<std::uint32_t> plus) {
  return {sorted(std::move(plus)), sorted(std::move(minus)), RowSense::kStrict};
}

CutRow CutRow::equal(std::vector<std::uint32_t> minus,
                     std::vector<std::uint32_t> plus) {
  return {sorted(std::move(plus)), sorted(std::move(minus)), RowSense::kEqual};
}

std::int64_t CutRow::activity(std::span<const std::int64_t> x) const {
  std::int64_t a = 0;
  for (auto v : plus) a += x[v];
  for (auto v : minus) a -= x[v];
  return a;
}

bool CutRow::satisfied_by(std::span<const std::int64_t> x) const {
  const std::int64_t a = activity(x);
  return sense == RowSense::kStrict ? a >= 1 : a == 0;
}

std::string CutRow::describe() const {
  auto side = [](const std::vector<std::uint32_t>& s) {
    if (s.empty()) return std::string("0");
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) out += " + ";
      out += "d" + std::to_string(s[i]);
    }
    return out;
  };
  return sense == RowSense::kStrict ? side(minus) + " + 1 <= " + side(plus)
                                    : side(minus) + " = " + side(plus);
}

void MasterModel::validate() const {
  if (lower.size() != nvars || upper.size() != nvars) {
    throw DimensionError("master bounds do not match nvars");
  }
  for (std::size_t i = 0; i < nvars; ++i) {
    if (lower[i] > upper[i]) {
      throw std::invalid_argument("master variable with empty domain");
    }
  }
  checked_abs_sum(lower);
  checked_abs_sum(upper);
  for (const auto& row : rows) {
    for (auto v : row.plus) {
      if (v >= nvars) throw DimensionError("row references unknown variable");
    }
    for (auto v : row.minus) {
      if (v >= nvars) throw DimensionError("row references unknown variable");
    }
    std::vector<std::uint32_t> both;
    std::set_intersection(row.plus.begin(), row.plus.end(), row.minus.begin(),
                          row.minus.end(), std::back_inserter(both));
    if (!both.empty()) throw std::invalid_argument("row sides overlap");
  }
}

bool MasterModel::feasible(std::span<const std::int64_t> x) const {
  if (x.size() != nvars) return false;
  for (std::size_t i = 0; i < nvars; ++i) {
    if (x[i] < lower[i] || x[i] > upper[i]) return false;
  }
  return std::all_of(rows.begin(), rows.end(),
                     [&](const CutRow& r) { return r.satisfied_by(x); });
}

MasterResult solve_master(const MasterModel& model,
                          std::optional<std::span<const std::int64_t>> incumbent,
                          const MasterOptions& options) {
  model.validate();
  std::int64_t cutoff = 0;
  if (incumbent) {
    if (!model.feasible(*incumbent)) {
      throw std::invalid_argument("master incumbent violates the model");
    }
    cutoff = std::accumulate(incumbent->begin(), incumbent->end(), std::int64_t{0});
  } else {
    cutoff = std::accumulate(model.upper.begin(), model.upper.end(), std::int64_t{0});
  }

  BranchAndBound bb(model, options);
  std::int64_t floor = std::accumulate(model.lower.begin(), model.lower.end(), std::int64_t{0});
  if (options.objective_floor) floor = std::max(floor, *options.objective_floor);
  const double root = bb.root_bound();
  if (root > static_cast<double>(cutoff) + lp_tolerance(cutoff)) {
    floor = cutoff + 1;
  } else {
    floor = std::max(floor, static_cast<std::int64_t>(std::ceil(root - lp_tolerance(cutoff))));
  }
  bool settled = false;
  {
    for (int i = 0; i < kDeepeningLevels && floor <= cutoff; ++i, ++floor) {
      bb.run(floor, true, floor);
      if (bb.found() || bb.timed_out()) {
        settled = true;
        break;
      }
    }
  }
  // Exact search under a doubling cutoff: a wide cutoff leaves the depth-first
  // search almost unpruned, so it is only used when nothing closer exists.
  for (std::int64_t step = 16; !settled && floor <= cutoff; step *= 2) {
    const std::int64_t level = std::min(cutoff, floor + step);
    bb.run(level, false, floor);
    if (bb.found() || bb.timed_out()) break;
    floor = level + 1;
  }

  MasterResult result;
  result.nodes = bb.nodes();
  if (bb.found()) {
    result.values = bb.best();
  } else if (incumbent) {
    result.values.assign(incumbent->begin(), incumbent->end());
  }
  if (bb.timed_out()) {
    result.status = MasterStatus::kTimeLimit;
  } else if (result.values.empty()) {
    result.status = MasterStatus::kInfeasible;
    return result;
  } else {
    result.status = MasterStatus::kOptimal;
    if (!bb.found()) {
      throw InternalError("master search missed a feasible incumbent");
    }
  }
  if (!result.values.empty()) {
    if (!model.feasible(result.values)) {
      throw InternalError("master solution fails its own rows");
    }
    result.objective = std::accumulate(result.values.begin(), result.values.end(),
                                       std::int64_t{0});
  }
  return result;
}

}  // namespace objcontract
