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

#include "objcontract/enumeration.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <tuple>
#include <sstream>

#include "ternary.hpp"

namespace objcontract {
namespace {

constexpr std::size_t kLowBits = 12;

void require_cap(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap) {
    throw CapExceededError(std::string(what) + ": n=" + std::to_string(n) +
                           " exceeds the hard limit of " + std::to_string(cap) +
                           " variables");
  }
}

// Calls fn(encoding, point) for every feasible x in ascending encoding.
template <typename Fn>
void for_each_feasible(const Instance& inst, std::size_t cap, Fn&& fn) {
  inst.validate();
  const std::size_t n = inst.nvars;
  require_cap(n, cap, "feasible-set enumeration");
  for (const auto& row : inst.objectives.rows()) checked_abs_sum(row.values());
  for (const auto& con : inst.constraints) checked_abs_sum(con.coeffs);

  const std::size_t low = std::min(n, kLowBits);
  auto split = [&](std::span<const std::int64_t> row) {
    return std::pair{subset_sums(row.subspan(0, low)),
                     subset_sums(row.subspan(low))};
  };
  std::vector<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>>
      obj_tables, con_tables;
  for (const auto& row : inst.objectives.rows()) {
    obj_tables.push_back(split(row.values()));
  }
  for (const auto& con : inst.constraints) {
    con_tables.push_back(split(con.coeffs));
  }

  const std::size_t block = std::size_t{1} << low;
  const std::size_t blocks = std::size_t{1} << (n - low);
  std::vector<std::uint8_t> mask(block);
  std::vector<std::int64_t> point(inst.nobjs);
  for (std::size_t h = 0; h < blocks; ++h) {
    std::fill(mask.begin(), mask.end(), std::uint8_t{1});
    for (std::size_t k = 0; k < con_tables.size(); ++k) {
      const auto& con = inst.constraints[k];
      kernels::and_constraint_mask(con_tables[k].first, con_tables[k].second[h],
                                   con.sense, con.rhs, mask);
    }
    for (std::size_t i = 0; i < block; ++i) {
      if (!mask[i]) continue;
      for (std::size_t r = 0; r < inst.nobjs; ++r) {
        point[r] = obj_tables[r].first[i] + obj_tables[r].second[h];
      }
      fn((static_cast<std::uint64_t>(h) << low) | i,
         std::span<const std::int64_t>(point));
    }
  }
}

BinaryVector indicator(std::span<const std::int8_t> z, std::int8_t side) {
  BinaryVector x(z.size(), 0);
  for (std::size_t i = 0; i < z.size(); ++i) x[i] = z[i] == side;
  return x;
}

}  // namespace

std::vector<std::int64_t> subset_sums(std::span<const std::int64_t> coeffs) {
  std::vector<std::int64_t> sums(std::size_t{1} << coeffs.size(), 0);
  std::span<std::int64_t> all(sums);
  std::size_t m = 1;
  for (std::int64_t c : coeffs) {
    kernels::add_offset(all.subspan(0, m), c, all.subspan(m, m));
    m *= 2;
  }
  return sums;
}

std::vector<FeasibleSolution> enumerate_feasible(const Instance& instance,
                                                 std::size_t cap) {
  std::vector<FeasibleSolution> out;
  for_each_feasible(instance, cap,
                    [&](std::uint64_t idx, std::span<const std::int64_t> p) {
                      out.push_back({decode_binary(idx, instance.nvars),
                                     Point({p.begin(), p.end()})});
                    });
  return out;
}

ParetoSet pareto_front(const Instance& instance, std::size_t cap) {
  struct Entry {
    Point point;
    std::vector<std::uint64_t> encodings;
  };
  std::vector<Entry> archive;
  Point candidate;
  for_each_feasible(
      instance, cap, [&](std::uint64_t idx, std::span<const std::int64_t> p) {
        candidate.values.assign(p.begin(), p.end());
        for (auto& e : archive) {
          if (e.point == candidate) {
            e.encodings.push_back(idx);
            return;
          }
          if (dominates(e.point, candidate)) return;
        }
        std::erase_if(archive, [&](const Entry& e) {
          return dominates(candidate, e.point);
        });
        archive.push_back({candidate, {idx}});
      });
  std::sort(archive.begin(), archive.end(),
            [](const Entry& a, const Entry& b) { return a.point < b.point; });
  ParetoSet front;
  for (auto& e : archive) {
    ParetoEntry pe{std::move(e.point), {}};
    for (std::uint64_t idx : e.encodings) {
      pe.solutions.push_back(decode_binary(idx, instance.nvars));
    }
    front.entries.push_back(std::move(pe));
  }
  return front;
}

std::size_t OrderSignature::distinct_values() const {
  if (ranks.empty()) return 0;
  return *std::max_element(ranks.begin(), ranks.end()) + 1U;
}

OrderSignature order_signature(const CoefficientVector& c, std::size_t cap) {
  require_cap(c.size(), cap, "order signature");
  checked_abs_sum(c.values());
  const auto sums = subset_sums(c.values());
  std::vector<std::uint32_t> order(sums.size());
  std::iota(order.begin(), order.end(), 0U);
  std::sort(order.begin(), order.end(),
            [&](std::uint32_t a, std::uint32_t b) { return sums[a] < sums[b]; });
  OrderSignature sig{std::vector<std::uint32_t>(sums.size())};
  std::uint32_t rank = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i > 0 && sums[order[i]] != sums[order[i - 1]]) ++rank;
    sig.ranks[order[i]] = rank;
  }
  return sig;
}

std::string_view to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::kOrderFlip:
      return "order-flip";
    case ViolationKind::kTieBroken:
      return "tie-broken";
    case ViolationKind::kTieCreated:
      return "tie-created";
    case ViolationKind::kOutOfBounds:
      return "out-of-bounds";
  }
  return "?";
}

bool ViolationReport::consistent() const {
  const auto [cx, cy] = original_values;
  const auto [dx, dy] = transformed_values;
  switch (kind) {
    case ViolationKind::kOrderFlip:
      return cx < cy && dx > dy;
    case ViolationKind::kTieBroken:
      return cx == cy && dx != dy;
    case ViolationKind::kTieCreated:
      return cx < cy && dx == dy;
    case ViolationKind::kOutOfBounds:
      // (c_i, bound) and (d_i, bound): d_i must share c_i's sign and stay
      // within the bound in magnitude.
      return (dx < 0 ? -dx : dx) > cy || (cx > 0) != (dx > 0) ||
             (cx < 0) != (dx < 0);
  }
  return false;
}

std::string ViolationReport::describe() const {
  auto bits = [](const BinaryVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ',';
      s += static_cast<char>('0' + v[i]);
    }
    return s + ")";
  };
  std::ostringstream os;
  os << to_string(kind) << " x=" << bits(x) << " y=" << bits(y)
     << " original=(" << original_values.first << ","
     << original_values.second << ") transformed=("
     << transformed_values.first << "," << transformed_values.second << ")";
  return os.str();
}

std::vector<ViolationReport> verify_order_preserving(
    const CoefficientVector& c, const CoefficientVector& d, std::size_t cap) {
  if (c.size() != d.size()) {
    throw DimensionError("order check on vectors of different length");
  }
  require_cap(c.size(), cap, "order-preservation check");
  checked_abs_sum(c.values());
  checked_abs_sum(d.values());
  const std::size_t n = c.size();
  const auto cs = subset_sums(c.values());
  const auto ds = subset_sums(d.values());
  std::vector<std::uint32_t> order(cs.size());
  std::iota(order.begin(), order.end(), 0U);

  auto report = [&](ViolationKind kind, std::uint32_t a, std::uint32_t b) {
    return ViolationReport{kind, decode_binary(a, n), decode_binary(b, n),
                           {cs[a], cs[b]}, {ds[a], ds[b]}};
  };
  std::vector<ViolationReport> out;

  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return std::tie(cs[a], ds[a], a) < std::tie(cs[b], ds[b], b);
  });
  // Flip: a c-group whose smallest d is below the largest d seen in any
  // strictly c-smaller group.
  {
    std::optional<std::uint32_t> running_max;
    for (std::size_t i = 0; i < order.size();) {
      std::size_t j = i;
      while (j + 1 < order.size() && cs[order[j + 1]] == cs[order[i]]) ++j;
      if (running_max && ds[order[i]] < ds[*running_max]) {
        out.push_back(report(ViolationKind::kOrderFlip, *running_max, order[i]));
        break;
      }
      if (!running_max || ds[order[j]] > ds[*running_max]) running_max = order[j];
      i = j + 1;
    }
  }
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && cs[order[j + 1]] == cs[order[i]]) ++j;
    if (ds[order[i]] != ds[order[j]]) {
      out.push_back(report(ViolationKind::kTieBroken, order[i], order[j]));
      break;
    }
    i = j + 1;
  }
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return std::tie(ds[a], cs[a], a) < std::tie(ds[b], cs[b], b);
  });
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && ds[order[j + 1]] == ds[order[i]]) ++j;
    if (cs[order[i]] != cs[order[j]]) {
      out.push_back(report(ViolationKind::kTieCreated, order[i], order[j]));
      break;
    }
    i = j + 1;
  }
  return out;
}

std::vector<ViolationReport> verify_ocpset_feasible(
    const CoefficientVector& c, const CoefficientVector& d, std::size_t cap,
    std::size_t max_reports) {
  if (c.size() != d.size()) {
    throw DimensionError("OCPset check on vectors of different length");
  }
  require_cap(c.size(), cap, "OCPset feasibility check");
  checked_abs_sum(c.values());
  checked_abs_sum(d.values());
  const std::size_t n = c.size();
  std::vector<ViolationReport> out;

  std::int64_t bound = 0;
  for (std::int64_t v : c.values()) bound = std::max(bound, v < 0 ? -v : v);
  for (std::size_t i = 0; i < n && out.size() < max_reports; ++i) {
    const std::int64_t mag = d[i] < 0 ? -d[i] : d[i];
    const bool sign_ok = (c[i] > 0) == (d[i] > 0) && (c[i] < 0) == (d[i] < 0);
    if (mag > bound || !sign_ok) {
      BinaryVector e(n, 0);
      e[i] = 1;
      out.push_back({ViolationKind::kOutOfBounds, std::move(e),
                     BinaryVector(n, 0), {c[i], bound}, {d[i], bound}});
    }
  }

  // z = (high | low); high covers indices [0, split), low the rest, so the
  // scan runs in lexicographic order of z.
  const std::size_t low_len = std::min<std::size_t>(n, 8);
  const std::size_t split = n - low_len;
  const auto c_low = detail::ternary_sums(c.values().subspan(split));
  const auto d_low = detail::ternary_sums(d.values().subspan(split));
  const auto c_high = detail::ternary_sums(c.values().subspan(0, split));
  const auto d_high = detail::ternary_sums(d.values().subspan(0, split));
  const std::uint64_t low_states = c_low.size();
  std::vector<std::int8_t> z(n);

  for (std::size_t h = 0; h < c_high.size() && out.size() < max_reports; ++h) {
    std::size_t pos = 0;
    while (pos < low_states && out.size() < max_reports) {
      const std::size_t hit = kernels::find_order_violation(
          std::span<const std::int64_t>(c_low).subspan(pos),
          std::span<const std::int64_t>(d_low).subspan(pos), c_high[h],
          d_high[h]);
      if (hit == low_states - pos) break;
      const std::size_t l = pos + hit;
      pos = l + 1;
      const std::int64_t cz = c_low[l] + c_high[h];
      const std::int64_t dz = d_low[l] + d_high[h];
      if (cz == 0 && dz < 0) continue;  // mirror of a reported pair
      detail::decode_ternary(h * low_states + l, z);
      BinaryVector xs = indicator(z, 1);
      BinaryVector ys = indicator(z, -1);
      const std::int64_t cx = c.evaluate(xs), cy = c.evaluate(ys);
      const std::int64_t dx = d.evaluate(xs), dy = d.evaluate(ys);
      ViolationKind kind = cz == 0   ? ViolationKind::kTieBroken
                           : dz == 0 ? ViolationKind::kTieCreated
                                     : ViolationKind::kOrderFlip;
      out.push_back({kind, std::move(xs), std::move(ys), {cx, cy}, {dx, dy}});
    }
  }
  return out;
}

}  // namespace objcontract
