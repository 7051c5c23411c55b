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

#include "objcontract/core.hpp"
#include "oracles.hpp"

using namespace objcontract;

TEST_CASE("dominance is strict and irreflexive", "[core]") {
  CHECK(dominates(Point{1, 2}, Point{2, 2}));
  CHECK_FALSE(dominates(Point{1, 2}, Point{1, 2}));
  CHECK_FALSE(dominates(Point{2, 2}, Point{1, 2}));
  // The two image points of the rounding example are incomparable.
  CHECK_FALSE(dominates(Point{12, 16}, Point{13, 5}));
  CHECK_FALSE(dominates(Point{13, 5}, Point{12, 16}));
  CHECK_THROWS_AS(dominates(Point{1}, Point{1, 2}), DimensionError);
}

TEST_CASE("non-dominated filter", "[core]") {
  const std::vector<Point> a{{0, 0}, {1, 1}, {1, 2}, {2, 3}};
  CHECK(nondominated_filter(a) == std::vector<Point>{{0, 0}});
  const std::vector<Point> b{{3, 1}, {4, 4}};
  CHECK(nondominated_filter(b) == std::vector<Point>{{3, 1}});
  const std::vector<Point> c{{1, 1}, {1, 2}, {2, 3}};
  CHECK(nondominated_filter(c) == std::vector<Point>{{1, 1}});
  const std::vector<Point> dup{{2, 1}, {1, 2}, {2, 1}};
  CHECK(nondominated_filter(dup) == std::vector<Point>{{1, 2}, {2, 1}});
  CHECK(nondominated_filter(std::vector<Point>{}).empty());
}

TEST_CASE("non-dominated filter matches pairwise definition", "[core][property]") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const std::size_t k = 1 + rng() % 12;
    const std::size_t p = 1 + rng() % 3;
    std::vector<Point> pts;
    for (std::size_t i = 0; i < k; ++i) pts.emplace_back(oracle::random_vec(rng, p, 0, 5));
    std::vector<Point> expect;
    for (const auto& a : pts) {
      bool dom = false;
      for (const auto& b : pts) dom = dom || dominates(b, a);
      if (!dom) expect.push_back(a);
    }
    std::sort(expect.begin(), expect.end());
    expect.erase(std::unique(expect.begin(), expect.end()), expect.end());
    REQUIRE(nondominated_filter(pts) == expect);
  }
}

TEST_CASE("ideal point", "[core]") {
  CHECK(ideal_point(std::vector<Point>{{3, 5}, {4, 2}}) == Point{3, 2});
  CHECK(ideal_point(std::vector<Point>{{7, 7}}) == Point{7, 7});
  CHECK(ideal_point(std::vector<Point>{{2417815, 3892271}, {2417817, 3892270}}) ==
        Point{2417815, 3892270});
  CHECK_THROWS_AS(ideal_point(std::vector<Point>{}), std::invalid_argument);
}

TEST_CASE("hypervolume small cases", "[core]") {
  CHECK(hypervolume(std::vector<Point>{{1, 2}, {2, 1}}, Point{0, 0}) == 3);
  CHECK(hypervolume(std::vector<Point>{}, Point{0, 0}) == 0);
  CHECK(hypervolume(std::vector<Point>{{4}}, Point{1}) == 3);
  // A point not dominated by the reference contributes nothing.
  CHECK(hypervolume(std::vector<Point>{{0, 5}, {2, 2}}, Point{0, 0}) == 4);
  CHECK_THROWS_AS(hypervolume(std::vector<Point>{{1, 2, 3}}, Point{0, 0}), DimensionError);
}

TEST_CASE("hypervolume agrees with inclusion-exclusion", "[core][oracle]") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 300; ++t) {
    const std::size_t p = 1 + rng() % 4;
    const std::size_t k = rng() % 9;
    std::vector<Point> pts;
    for (std::size_t i = 0; i < k; ++i) pts.emplace_back(oracle::random_vec(rng, p, 1, 9));
    const Point ref(std::vector<std::int64_t>(p, 0));
    REQUIRE(hypervolume(pts, ref) == oracle::hypervolume(pts, ref));
  }
}

TEST_CASE("contraction factor", "[core]") {
  CHECK(contraction_factor({1, 3, 7, 20}, {1, 2, 4, 8}) == Rational(16, 31));
  CHECK(contraction_factor({4, 5}, {4, 5}) == 0);
  CHECK(contraction_factor({10, 20, 35}, {1, 2, 4}) == Rational(58, 65));
  CHECK_THROWS_AS(contraction_factor({0, 0}, {0, 0}), std::domain_error);
  CHECK_THROWS_AS(contraction_factor({1, 2}, {1}), DimensionError);
  CHECK_THROWS_AS(contraction_factor({-1, 2}, {-1, 2}), std::invalid_argument);
}

TEST_CASE("coefficient vectors and sign classes", "[core]") {
  CHECK(CoefficientVector{1, 2}.sign_class() == SignClass::kAllPositive);
  CHECK(CoefficientVector{0, 2}.sign_class() == SignClass::kContainsZero);
  CHECK(CoefficientVector{-1, 0, 2}.sign_class() == SignClass::kMixed);
  CHECK(CoefficientVector{-1, -2}.has_negative());
  CHECK_THROWS_AS(CoefficientVector(std::vector<std::int64_t>{}), std::invalid_argument);
  const CoefficientVector c{3, -1, 4};
  const BinaryVector x{1, 1, 0};
  CHECK(c.evaluate(x) == 2);
}

TEST_CASE("instance shape validation", "[core]") {
  Instance inst;
  inst.nvars = 2;
  inst.nobjs = 2;
  inst.objectives = ObjectiveMatrix({{1, 1}, {1, 2}});
  CHECK_NOTHROW(inst.validate());
  inst.constraints.push_back({{1, 1}, Sense::kGe, 1});
  CHECK(inst.feasible(BinaryVector{1, 0}));
  CHECK_FALSE(inst.feasible(BinaryVector{0, 0}));
  inst.constraints.push_back({{1}, Sense::kLe, 1});
  CHECK_THROWS_AS(inst.validate(), DimensionError);
  CHECK_THROWS_AS(ObjectiveMatrix({{1, 2}, {1}}), DimensionError);
  Instance wrong = inst;
  wrong.constraints.clear();
  wrong.nobjs = 3;
  CHECK_THROWS_AS(wrong.validate(), DimensionError);
}

TEST_CASE("binary encoding round trip", "[core]") {
  for (std::uint64_t i = 0; i < 64; ++i) {
    const auto x = decode_binary(i, 6);
    REQUIRE(encode_binary(x) == i);
  }
  CHECK(decode_binary(5, 3) == BinaryVector{1, 0, 1});
}

TEST_CASE("fixed-point rendering is exact", "[core]") {
  CHECK(to_fixed(Rational(16, 31) * 100, 4) == "51.6129");
  CHECK(to_fixed(Rational(1, 2), 0) == "1");
  CHECK(to_fixed(Rational(-1, 8), 2) == "-0.13");
  CHECK(to_fixed(Rational(0), 3) == "0.000");
}
