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

#include <cmath>
#include <sstream>

#include "objcontract/bench.hpp"

using namespace objcontract;

TEST_CASE("sampler names", "[bench]") {
  CHECK(parse_sampler_kind("uniform") == SamplerKind::kUniform);
  CHECK(parse_sampler_kind("oom") == SamplerKind::kOrderOfMagnitude);
  CHECK(parse_sampler_kind("order-of-magnitude") == SamplerKind::kOrderOfMagnitude);
  CHECK(parse_sampler_kind("logarithmic") == SamplerKind::kLogarithmic);
  CHECK(to_string(SamplerKind::kLogarithmic) == "log");
  CHECK_THROWS_AS(parse_sampler_kind("gauss"), std::invalid_argument);
}

TEST_CASE("splitmix reference output", "[bench]") {
  SplitMix64 s(0);
  CHECK(s.next() == 0xe220a8397b1dcdafULL);
  CHECK(s.next() == 0x6e789e6aa1b965f4ULL);
  CHECK(derive_seed(1, {2, 3}) == derive_seed(1, {2, 3}));
  CHECK(derive_seed(1, {2, 3}) != derive_seed(1, {3, 2}));
}

TEST_CASE("decades", "[bench]") {
  using D = std::vector<std::pair<std::int64_t, std::int64_t>>;
  CHECK(decades(1, 1000) == D{{1, 9}, {10, 99}, {100, 1000}});
  CHECK(decades(5, 250) == D{{5, 9}, {10, 99}, {100, 250}});
  CHECK(decades(1, 10000).size() == 4);
}

TEST_CASE("samplers stay in range", "[bench]") {
  for (auto kind : {SamplerKind::kUniform, SamplerKind::kOrderOfMagnitude,
                    SamplerKind::kLogarithmic}) {
    const SamplerSpec spec{kind, 3, 700, 99};
    const CoefficientVector c = sample(spec, 500);
    for (auto v : c.values()) {
      REQUIRE(v >= 3);
      REQUIRE(v <= 700);
    }
    CHECK(sample(spec, 500) == c);
  }
  CHECK_THROWS_AS(sample({SamplerKind::kUniform, 5, 5, 0}, 3), std::invalid_argument);
  CHECK_THROWS_AS(sample({SamplerKind::kUniform, 1, 5, 0}, 0), std::invalid_argument);
}

TEST_CASE("order-of-magnitude sampler spreads over decades", "[bench][statistics]") {
  const CoefficientVector c = sample({SamplerKind::kOrderOfMagnitude, 1, 10000, 5}, 4000);
  std::array<double, 4> counts{};
  for (auto v : c.values()) {
    const auto d = static_cast<std::size_t>(std::min<std::int64_t>(3, std::max<std::int64_t>(
        0, static_cast<std::int64_t>(std::floor(std::log10(static_cast<double>(v)))))));
    counts[d] += 1;
  }
  double chi2 = 0;
  for (double o : counts) chi2 += (o - 1000.0) * (o - 1000.0) / 1000.0;
  // 3 degrees of freedom; 16.27 is the 0.999 quantile.
  CHECK(chi2 < 16.27);
}

TEST_CASE("logarithmic sampler has a geometric median", "[bench][statistics]") {
  const CoefficientVector c = sample({SamplerKind::kLogarithmic, 1, 1000000, 8}, 4001);
  std::vector<double> v;
  for (auto x : c.values()) v.push_back(static_cast<double>(x));
  const double med = quantile(v, 0.5);
  CHECK(med > 1000.0 / 1.5);
  CHECK(med < 1000.0 * 1.5);
}

TEST_CASE("unbiased integer draws", "[bench]") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 1000; ++i) {
    const auto v = uniform_int(rng, -3, 3);
    REQUIRE(v >= -3);
    REQUIRE(v <= 3);
    const double u = uniform_unit(rng);
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
  }
  CHECK(uniform_int(rng, 4, 4) == 4);
  CHECK_THROWS_AS(uniform_int(rng, 2, 1), std::invalid_argument);
}

TEST_CASE("quantiles", "[bench]") {
  CHECK(quantile({0.0, 50.0}, 0.5) == 25.0);
  CHECK(quantile({3.0, 1.0, 2.0}, 0.5) == 2.0);
  CHECK(quantile({1.0, 2.0, 3.0, 4.0}, 0.25) == Catch::Approx(1.75));
  const Quantiles q = quantiles({5.0});
  CHECK(q.min == 5.0);
  CHECK(q.max == 5.0);
  CHECK_THROWS_AS(quantile({}, 0.5), std::invalid_argument);
}

TEST_CASE("grid validation and size", "[bench]") {
  StudyGrid g;
  g.samplers = {SamplerKind::kUniform, SamplerKind::kOrderOfMagnitude, SamplerKind::kLogarithmic};
  g.n_values = {4, 5};
  g.k_values = {3, 4, 5, 6, 7};
  g.samples_per_cell = 5;
  CHECK(g.size() == 150);
  CHECK(g.size() / g.n_values.size() == 75);
  CHECK_NOTHROW(g.validate());
  g.k_values = {0};
  CHECK_THROWS_AS(g.validate(), std::invalid_argument);
  g.k_values = {3};
  g.samplers.clear();
  CHECK_THROWS_AS(g.validate(), std::invalid_argument);
}

TEST_CASE("study run, CSV and summary", "[bench]") {
  StudyGrid g;
  g.samplers = {SamplerKind::kUniform, SamplerKind::kLogarithmic};
  g.n_values = {3, 4};
  g.k_values = {2, 3};
  g.samples_per_cell = 3;
  g.seed = 11;
  std::size_t seen = 0;
  StudyOptions opt;
  opt.on_record = [&](const StudyRecord&) { ++seen; };
  const auto recs = run_study(g, {}, opt);
  REQUIRE(recs.size() == g.size());
  CHECK(seen == g.size());
  CHECK(recs[0].sampler == SamplerKind::kUniform);
  CHECK(recs[0].n == 3);
  CHECK(recs[0].k == 2);
  CHECK(recs[1].sample_index == 1);
  CHECK(recs.back().sampler == SamplerKind::kLogarithmic);
  for (const auto& r : recs) {
    REQUIRE(r.c.size() == r.n);
    REQUIRE(r.range_hi == (r.k == 2 ? 100 : 1000));
    REQUIRE(r.gamma >= 0);
  }

  StudyOptions par;
  par.workers = 2;
  const auto again = run_study(g, {}, par);
  for (std::size_t i = 0; i < recs.size(); ++i) {
    REQUIRE(again[i].c == recs[i].c);
    REQUIRE(again[i].d == recs[i].d);
  }

  const std::string csv = to_csv(recs);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == kCsvHeader);
  std::size_t rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == recs.size());

  const StudySummary s = summarize(recs);
  REQUIRE(s.by_n.size() == 2);
  CHECK(s.by_n[0].key == "n=3");
  CHECK(s.by_n[0].count == 12);
  REQUIRE(s.by_sampler.size() == 2);
  CHECK(s.by_sampler[1].key == "sampler=log");
  CHECK(s.csv == csv);
  const std::string text = format_summary(s);
  CHECK(text.find("n=4") != std::string::npos);
  CHECK_THROWS_AS(summarize({}), std::invalid_argument);
}

TEST_CASE("summary of known gamma values", "[bench]") {
  std::vector<StudyRecord> recs(2);
  recs[0].n = 5;
  recs[0].gamma = 0;
  recs[1].n = 5;
  recs[1].gamma = Rational(1, 2);
  recs[1].status = ContractionStatus::kOptimal;
  const StudySummary s = summarize(recs);
  CHECK(s.by_n[0].gamma_pct.median == 25.0);
  CHECK(s.by_n[0].contractable == 1);
}
