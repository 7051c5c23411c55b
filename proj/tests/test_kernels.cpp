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

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "objcontract/kernels/kernels.hpp"
#include "oracles.hpp"

using namespace objcontract::kernels;

namespace {

std::vector<const KernelTable*> wide_tables() {
  std::vector<const KernelTable*> out;
  if (isa_available(Isa::kAvx2)) out.push_back(&table_for(Isa::kAvx2));
  return out;
}

}  // namespace

TEST_CASE("scalar reference kernels", "[kernels]") {
  const KernelTable& s = scalar_table();
  const std::vector<std::int64_t> src{1, -2, 3};
  std::vector<std::int64_t> dst(3);
  s.add_offset(src.data(), 10, dst.data(), 3);
  CHECK(dst == std::vector<std::int64_t>{11, 8, 13});

  const std::vector<std::int64_t> c{5, -1, 0, 0};
  const std::vector<std::int64_t> d{5, 2, 0, 1};
  CHECK(s.find_order_violation(c.data(), d.data(), 0, 0, 4) == 1);
  CHECK(s.find_order_violation(c.data(), d.data(), 0, -3, 4) == 2);
  CHECK(s.find_order_violation(c.data(), d.data(), 5, 5, 4) == 4);

  std::vector<std::uint8_t> mask{1, 1, 1, 0};
  const std::vector<std::int64_t> lhs{1, 2, 3, 0};
  s.and_constraint_mask(lhs.data(), 0, Sense::kLe, 2, mask.data(), 4);
  CHECK(mask == std::vector<std::uint8_t>{1, 1, 0, 0});
  mask.assign(4, 1);
  s.and_constraint_mask(lhs.data(), 1, Sense::kEq, 3, mask.data(), 4);
  CHECK(mask == std::vector<std::uint8_t>{0, 1, 0, 0});
  mask.assign(4, 1);
  s.and_constraint_mask(lhs.data(), 0, Sense::kGe, 2, mask.data(), 4);
  CHECK(mask == std::vector<std::uint8_t>{0, 1, 1, 0});
}

TEST_CASE("wide kernels match the scalar reference", "[kernels][simd]") {
  const auto wide = wide_tables();
  if (wide.empty()) SKIP("no wide ISA on this CPU");
  const KernelTable& ref = scalar_table();
  std::mt19937_64 rng(41);
  for (const KernelTable* w : wide) {
    for (std::size_t n = 0; n <= 37; ++n) {
      for (int rep = 0; rep < 25; ++rep) {
        const auto a = oracle::random_vec(rng, n, -4, 4);
        const auto b = oracle::random_vec(rng, n, -4, 4);
        const std::int64_t off = oracle::random_vec(rng, 1, -3, 3)[0];
        const std::int64_t off2 = oracle::random_vec(rng, 1, -3, 3)[0];

        std::vector<std::int64_t> d1(n), d2(n);
        ref.add_offset(a.data(), off, d1.data(), n);
        w->add_offset(a.data(), off, d2.data(), n);
        REQUIRE(d1 == d2);

        REQUIRE(ref.find_order_violation(a.data(), b.data(), off, off2, n) ==
                w->find_order_violation(a.data(), b.data(), off, off2, n));

        for (Sense sense : {Sense::kLe, Sense::kEq, Sense::kGe}) {
          std::vector<std::uint8_t> m1(n), m2;
          for (auto& v : m1) v = static_cast<std::uint8_t>(rng() % 4 != 0);
          m2 = m1;
          ref.and_constraint_mask(a.data(), off, sense, off2, m1.data(), n);
          w->and_constraint_mask(a.data(), off, sense, off2, m2.data(), n);
          REQUIRE(m1 == m2);
        }
      }
    }
  }
}

TEST_CASE("runtime dispatch", "[kernels]") {
  CHECK(isa_available(Isa::kScalar));
  CHECK(isa_name(Isa::kScalar) == "scalar");
  CHECK(isa_name(Isa::kAvx2) == "avx2");
  const Isa before = active_isa();
  set_active_isa(Isa::kScalar);
  CHECK(active_isa() == Isa::kScalar);
  const std::vector<std::int64_t> src{1, 2};
  std::vector<std::int64_t> dst(2);
  add_offset(src, 1, dst);
  CHECK(dst == std::vector<std::int64_t>{2, 3});
  set_active_isa(before);
  CHECK(active_isa() == before);
}
