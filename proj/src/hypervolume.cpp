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

#include "objcontract/core.hpp"

namespace objcontract {
namespace {

// Volume of the union of boxes [ref, s] restricted to the first `dims`
// coordinates. All points satisfy s >= ref componentwise.
BigInt sweep(std::vector<const Point*> pts, const Point& ref,
             std::size_t dims) {
  if (pts.empty()) return 0;
  const std::size_t last = dims - 1;
  if (dims == 1) {
    std::int64_t top = ref[0];
    for (const Point* p : pts) top = std::max(top, (*p)[0]);
    return BigInt(top) - ref[0];
  }
  std::sort(pts.begin(), pts.end(), [last](const Point* a, const Point* b) {
    return (*a)[last] < (*b)[last];
  });
  BigInt volume = 0;
  std::int64_t floor = ref[last];
  for (std::size_t i = 0; i < pts.size();) {
    const std::int64_t level = (*pts[i])[last];
    if (level > floor) {
      // Slab (floor, level] is covered by every point reaching level.
      std::vector<const Point*> active(pts.begin() + static_cast<long>(i),
                                       pts.end());
      volume += (BigInt(level) - floor) * sweep(std::move(active), ref, last);
      floor = level;
    }
    while (i < pts.size() && (*pts[i])[last] == level) ++i;
  }
  return volume;
}

}  // namespace

BigInt hypervolume(std::span<const Point> points, const Point& ref) {
  if (ref.size() == 0) throw DimensionError("reference point is empty");
  std::vector<const Point*> contributing;
  for (const auto& s : points) {
    if (s.size() != ref.size()) {
      throw DimensionError("point and reference differ in dimension");
    }
    if (dominates(ref, s)) contributing.push_back(&s);
  }
  return sweep(std::move(contributing), ref, ref.size());
}

}  // namespace objcontract
