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

#include "lp_bound.hpp"

#include <algorithm>
#include <cmath>

namespace objcontract::detail {
namespace {

constexpr double kPivotTol = 1e-9;
constexpr double kPriceTol = 1e-9;
// Consecutive degenerate pivots tolerated before switching to Bland's rule.
constexpr int kDegenerateStreak = 30;
constexpr int kRefactorEvery = 64;

}  // namespace

LpBound::LpBound(std::size_t nvars, std::vector<LpRow> rows)
    : n_(nvars), rows_(std::move(rows)) {}

double LpBound::cost(std::uint32_t j, const std::vector<std::int64_t>& lo,
                     const std::vector<std::int64_t>& hi) const {
  const std::size_t r = rows_.size();
  if (j < r) return static_cast<double>(rows_[j].rhs);
  if (j < r + n_) return static_cast<double>(lo[j - r]);
  return -static_cast<double>(hi[j - r - n_]);
}

double LpBound::dot(std::uint32_t j, const std::vector<double>& pi) const {
  const std::size_t r = rows_.size();
  if (j < r) {
    double s = 0.0;
    for (auto v : rows_[j].pos) s += pi[v];
    for (auto v : rows_[j].neg) s -= pi[v];
    return s;
  }
  if (j < r + n_) return pi[j - r];
  return -pi[j - r - n_];
}

void LpBound::column(std::uint32_t j, std::vector<double>& out) const {
  out.assign(n_, 0.0);
  const std::size_t r = rows_.size();
  if (j < r) {
    for (auto v : rows_[j].pos) out[v] += 1.0;
    for (auto v : rows_[j].neg) out[v] -= 1.0;
  } else if (j < r + n_) {
    out[j - r] = 1.0;
  } else {
    out[j - r - n_] = -1.0;
  }
}

// Gauss-Jordan with partial pivoting; binv is row-major n x n.
bool LpBound::invert(const std::vector<std::uint32_t>& basis,
                     std::vector<double>& binv) const {
  const std::size_t n = n_;
  std::vector<double> a(n * n, 0.0);
  std::vector<double> col;
  for (std::size_t k = 0; k < n; ++k) {
    column(basis[k], col);
    for (std::size_t i = 0; i < n; ++i) a[i * n + k] = col[i];
  }
  binv.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) binv[i * n + i] = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t i = c + 1; i < n; ++i) {
      if (std::abs(a[i * n + c]) > std::abs(a[p * n + c])) p = i;
    }
    if (std::abs(a[p * n + c]) < 1e-12) return false;
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) {
        std::swap(a[p * n + k], a[c * n + k]);
        std::swap(binv[p * n + k], binv[c * n + k]);
      }
    }
    const double inv = 1.0 / a[c * n + c];
    for (std::size_t k = 0; k < n; ++k) {
      a[c * n + k] *= inv;
      binv[c * n + k] *= inv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c) continue;
      const double f = a[i * n + c];
      if (f == 0.0) continue;
      for (std::size_t k = 0; k < n; ++k) {
        a[i * n + k] -= f * a[c * n + k];
        binv[i * n + k] -= f * binv[c * n + k];
      }
    }
  }
  return true;
}

LpResult LpBound::solve(const std::vector<std::int64_t>& lo,
                        const std::vector<std::int64_t>& hi,
                        std::vector<std::uint32_t>& basis) const {
  const std::size_t n = n_;
  const std::size_t r = rows_.size();
  const std::size_t ncols = num_columns();
  auto slack_basis = [&] {
    basis.resize(n);
    for (std::size_t i = 0; i < n; ++i) basis[i] = static_cast<std::uint32_t>(r + i);
  };

  std::vector<double> binv;
  std::vector<double> xb(n);
  auto primal = [&] {
    // x_B = B^-1 * 1
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += binv[i * n + k];
      xb[i] = s;
    }
  };
  bool ok = basis.size() == n &&
            std::all_of(basis.begin(), basis.end(), [&](auto j) { return j < ncols; }) &&
            invert(basis, binv);
  if (ok) {
    primal();
    ok = std::all_of(xb.begin(), xb.end(), [](double v) { return v > -1e-9; });
  }
  if (!ok) {
    slack_basis();
    invert(basis, binv);
    primal();
  }

  std::vector<char> in_basis(ncols, 0);
  for (auto j : basis) in_basis[j] = 1;
  std::vector<double> gb(n), pi(n), dcol(n), col;
  LpResult res;
  const int max_iter = static_cast<int>(20 * (ncols + n)) + 1000;
  int degenerate = 0;
  int since_refactor = 0;

  for (int iter = 0;; ++iter) {
    for (std::size_t i = 0; i < n; ++i) gb[i] = cost(basis[i], lo, hi);
    for (std::size_t k = 0; k < n; ++k) {
      double s = 0.0;
      for (std::size_t i = 0; i < n; ++i) s += gb[i] * binv[i * n + k];
      pi[k] = s;
    }
    double value = 0.0;
    for (std::size_t i = 0; i < n; ++i) value += gb[i] * std::max(0.0, xb[i]);
    res.value = value;
    if (iter >= max_iter) return res;

    // Pricing.
    const bool bland = degenerate >= kDegenerateStreak;
    std::int64_t enter = -1;
    double best = kPriceTol;
    for (std::uint32_t j = 0; j < ncols; ++j) {
      if (in_basis[j]) continue;
      const double scale = 1.0 + std::abs(cost(j, lo, hi));
      const double rc = cost(j, lo, hi) - dot(j, pi);
      if (rc <= kPriceTol * scale) continue;
      if (bland) {
        enter = j;
        break;
      }
      if (rc > best) {
        best = rc;
        enter = j;
      }
    }
    if (enter < 0) {
      res.exact = true;
      res.x = pi;
      return res;
    }

    column(static_cast<std::uint32_t>(enter), col);
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += binv[i * n + k] * col[k];
      dcol[i] = s;
    }
    std::int64_t leave = -1;
    double ratio = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (dcol[i] <= kPivotTol) continue;
      const double t = std::max(0.0, xb[i]) / dcol[i];
      if (leave < 0 || t < ratio - 1e-12 ||
          (t <= ratio + 1e-12 && basis[i] < basis[static_cast<std::size_t>(leave)])) {
        leave = static_cast<std::int64_t>(i);
        ratio = t;
      }
    }
    if (leave < 0) {
      // The dual ray proves the primal box and rows are incompatible.
      res.infeasible = true;
      return res;
    }
    degenerate = ratio <= 1e-12 ? degenerate + 1 : 0;

    const auto l = static_cast<std::size_t>(leave);
    in_basis[basis[l]] = 0;
    in_basis[static_cast<std::size_t>(enter)] = 1;
    basis[l] = static_cast<std::uint32_t>(enter);
    if (++since_refactor >= kRefactorEvery) {
      since_refactor = 0;
      if (!invert(basis, binv)) {
        slack_basis();
        std::fill(in_basis.begin(), in_basis.end(), 0);
        for (auto j : basis) in_basis[j] = 1;
        invert(basis, binv);
      }
      primal();
      continue;
    }
    const double piv = dcol[l];
    for (std::size_t k = 0; k < n; ++k) binv[l * n + k] /= piv;
    xb[l] /= piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == l || dcol[i] == 0.0) continue;
      const double f = dcol[i];
      for (std::size_t k = 0; k < n; ++k) binv[i * n + k] -= f * binv[l * n + k];
      xb[i] -= f * xb[l];
    }
  }
}

}  // namespace objcontract::detail
