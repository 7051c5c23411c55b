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

#include "objcontract/enumeration.hpp"
#include "objcontract/scaling.hpp"
#include "oracles.hpp"

using namespace objcontract;

TEST_CASE("gcd scaling", "[scaling]") {
  ScaleReport r = gcd_scale({6, 9, 15});
  CHECK(r.d == CoefficientVector{2, 3, 5});
  CHECK(r.lambda == Rational(1, 3));
  CHECK(r.exact == true);
  r = gcd_scale({7, 11});
  CHECK(r.d == CoefficientVector{7, 11});
  CHECK(r.lambda == 1);
  CHECK(gcd_scale({3, 6, 12}).d == CoefficientVector{1, 2, 4});
  CHECK(gcd_scale({-4, 6}).d == CoefficientVector{-2, 3});
  CHECK_THROWS_AS(gcd_scale({0, 0}), std::invalid_argument);
}

TEST_CASE("gcd scaling properties", "[scaling][property]") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 200; ++t) {
    auto c = oracle::random_vec(rng, 1 + rng() % 8, 1, 30);
    const std::int64_t m = 1 + static_cast<std::int64_t>(rng() % 5);
    for (auto& v : c) v *= m;
    const ScaleReport r = gcd_scale(CoefficientVector(c));
    CHECK(gcd_scale(r.d).d == r.d);
    CHECK(gcd_scale(r.d).lambda == 1);
    CHECK(verify_order_preserving(CoefficientVector(c), r.d).empty());
  }
}

TEST_CASE("scale and round", "[scaling]") {
  CHECK(scale_round({13, 11, 1}, 5).d == CoefficientVector{3, 3, 1});
  CHECK(scale_round({5, 6, 10}, 5).d == CoefficientVector{1, 2, 2});
  const ScaleReport big = scale_round_pow10({1721191, 2417815, 7529420}, 4);
  CHECK(big.d == CoefficientVector{173, 242, 753});
  CHECK(big.lambda == Rational(1, 10000));
  const ScaleReport id = scale_round({4, 9, 2}, 1);
  CHECK(id.d == CoefficientVector{4, 9, 2});
  CHECK(id.exact == true);
  CHECK(scale_round({3, 5, 7}, 100).d == CoefficientVector{1, 1, 1});
  CHECK(scale_round({3, 5}, Rational(3, 2)).d == CoefficientVector{5, 8});
  CHECK(scale_round({13, 11, 1}, 5).exact == false);
  CHECK_FALSE(scale_round(CoefficientVector(std::vector<std::int64_t>(21, 3)), 2).exact.has_value());
  CHECK_THROWS_AS(scale_round({1, 2}, 0), std::invalid_argument);
  CHECK_THROWS_AS(scale_round({-1, 2}, 2), std::invalid_argument);
}

TEST_CASE("rounding flips the dominance of two solutions", "[scaling]") {
  const CoefficientVector f1{13, 11, 1};
  const CoefficientVector f2{5, 6, 10};
  const BinaryVector x{0, 1, 1};
  const BinaryVector y{1, 0, 0};
  const Point fx{f1.evaluate(x), f2.evaluate(x)};
  const Point fy{f1.evaluate(y), f2.evaluate(y)};
  CHECK(fx == Point{12, 16});
  CHECK(fy == Point{13, 5});
  CHECK_FALSE(dominates(fx, fy));
  CHECK_FALSE(dominates(fy, fx));
  const CoefficientVector g1 = scale_round(f1, 5).d;
  const CoefficientVector g2 = scale_round(f2, 5).d;
  const Point gx{g1.evaluate(x), g2.evaluate(x)};
  const Point gy{g1.evaluate(y), g2.evaluate(y)};
  CHECK(gx == Point{4, 4});
  CHECK(gy == Point{3, 1});
  CHECK(dominates(gy, gx));
}

TEST_CASE("row scaling", "[scaling]") {
  const ObjectiveMatrix m({{2, 4}, {3, 9}});
  const std::vector<Rational> f{Rational(1, 2), Rational(1, 3)};
  CHECK(row_scale(m, f) == ObjectiveMatrix({{1, 2}, {1, 3}}));
  const std::vector<Rational> ones{1, 1};
  CHECK(row_scale(m, ones) == m);
  const std::vector<Rational> bad{Rational(1, 4), 1};
  CHECK_THROWS_AS(row_scale(m, bad), std::invalid_argument);
  const std::vector<Rational> neg{-1, 1};
  CHECK_THROWS_AS(row_scale(m, neg), std::invalid_argument);
  const std::vector<Rational> one{1};
  CHECK_THROWS_AS(row_scale(m, one), DimensionError);
}

TEST_CASE("row scaling keeps the efficient set", "[scaling][property]") {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + rng() % 10;
    Instance inst;
    inst.nvars = n;
    inst.nobjs = 2;
    inst.objectives = ObjectiveMatrix(
        {CoefficientVector(oracle::random_vec(rng, n, -5, 9)),
         CoefficientVector(oracle::random_vec(rng, n, -5, 9))});
    inst.constraints.push_back({oracle::random_vec(rng, n, 0, 2), Sense::kGe, 1});
    Instance scaled = inst;
    const std::vector<Rational> f{2, 2};
    scaled.objectives = row_scale(inst.objectives, f);
    REQUIRE(pareto_front(scaled).efficient_solutions() ==
            pareto_front(inst).efficient_solutions());
  }
}
