// Copyright 2026 The riesz-lab Authors
//
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

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <vector>

#include "oracles.hpp"
#include "riesz/construction.hpp"
#include "riesz/errors.hpp"
#include "riesz/presets.hpp"

namespace riesz {
namespace {

ConstructionParams make(std::vector<std::int64_t> m, std::vector<std::int64_t> t,
                        std::int64_t h1, SpacerSupport support = SpacerSupport::kSymmetric) {
  ConstructionParams p;
  p.stages = static_cast<int>(m.size());
  p.cuts = std::move(m);
  p.spacers = std::move(t);
  p.initial_height = h1;
  p.support = support;
  return p;
}

std::vector<std::int64_t> as_vector(const HeightSequence& h) {
  return {h.values().begin(), h.values().end()};
}

TEST(Params, ValidateRejectsBadShapes) {
  EXPECT_THROW(make({1}, {1}, 3).validate(), InvalidParams);
  EXPECT_THROW(make({2}, {0}, 3).validate(), InvalidParams);
  EXPECT_THROW(make({2}, {1}, 0).validate(), InvalidParams);
  auto p = make({2}, {1}, 3);
  p.stages = 2;
  EXPECT_THROW(p.validate(), InvalidParams);
  EXPECT_NO_THROW(make({2, 2}, {1, 1}, 8).validate());
}

TEST(Params, SupportParsing) {
  EXPECT_EQ(parse_support("symmetric"), SpacerSupport::kSymmetric);
  EXPECT_EQ(parse_support("nonnegative"), SpacerSupport::kNonNegative);
  EXPECT_EQ(parse_support(to_string(SpacerSupport::kNonNegative)), SpacerSupport::kNonNegative);
  EXPECT_THROW(parse_support("both"), InvalidParams);
}

TEST(BuildHeights, TwoStageRecursion) {
  const auto h = build_heights(make({3, 3}, {1, 1}, 1, SpacerSupport::kNonNegative));
  EXPECT_EQ(as_vector(h), (std::vector<std::int64_t>{1, 6, 21}));
}

TEST(BuildHeights, SingleStage) {
  EXPECT_EQ(as_vector(build_heights(make({2}, {1}, 3))), (std::vector<std::int64_t>{3, 8}));
}

TEST(BuildHeights, SymmetricGuard) {
  EXPECT_THROW(build_heights(make({64}, {5}, 5)), InvalidParams);
  EXPECT_THROW(build_heights(make({3}, {2}, 1)), InvalidParams);
}

TEST(BuildHeights, OverflowIsReported) {
  const auto p = make({1 << 20, 1 << 20, 1 << 20, 1 << 20}, {1, 1, 1, 1}, 2);
  EXPECT_THROW(build_heights(p), OverflowError);
}

TEST(BuildHeights, StrictlyIncreasingAndDoubling) {
  for (const auto& name : preset_names()) {
    const auto h = build_heights(preset(name));
    for (int j = 1; j < h.size(); ++j) EXPECT_GE(h[j + 1], 2 * h[j]) << name;
  }
}

TEST(StageExponents, FormulaSubstitution) {
  const auto p = make({3, 3}, {1, 1}, 1, SpacerSupport::kNonNegative);
  const auto h = build_heights(p);
  ASSERT_EQ(h[2], 6);
  const std::vector<std::int64_t> w{0, 1};
  EXPECT_EQ(stage_exponents(p, h, 2, w).n, (std::vector<std::int64_t>{0, 7, 15}));

  const auto q = make({2}, {1}, 3);
  const std::vector<std::int64_t> v{-1};
  EXPECT_EQ(stage_exponents(q, build_heights(q), 1, v).n, (std::vector<std::int64_t>{0, 3}));
}

TEST(StageExponents, RejectsOutOfSupport) {
  const auto q = make({2}, {1}, 3, SpacerSupport::kNonNegative);
  const std::vector<std::int64_t> v{-1};
  EXPECT_THROW(stage_exponents(q, build_heights(q), 1, v), InvalidParams);
}

TEST(StageExponents, GapsRespectSupport) {
  for (const auto support : {SpacerSupport::kSymmetric, SpacerSupport::kNonNegative}) {
    const auto p = make({16, 16}, {5, 7}, 9, support);
    const auto h = build_heights(p);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const auto omega = sample_omega(p, seed, 2);
      for (int j = 1; j <= 2; ++j) {
        const auto e = stage_exponents(p, h, omega, j);
        ASSERT_EQ(e.n.front(), 0);
        const std::int64_t min_gap =
            support == SpacerSupport::kSymmetric ? h[j] - p.t(j) : h[j];
        for (std::size_t k = 1; k < e.n.size(); ++k) ASSERT_GE(e.n[k] - e.n[k - 1], min_gap);
        ASSERT_LT(e.degree(), h[j + 1]);
      }
    }
  }
}

TEST(SampleOmega, EntriesInSupport) {
  const auto p = make({8, 8}, {3, 4}, 10, SpacerSupport::kNonNegative);
  const auto omega = sample_omega(p, 5, 2);
  ASSERT_EQ(omega.stages(), 2);
  for (int j = 1; j <= 2; ++j) {
    ASSERT_EQ(omega.stage(j).size(), 7u);
    for (auto w : omega.stage(j)) {
      EXPECT_GE(w, 0);
      EXPECT_LE(w, p.t(j));
    }
  }
}

TEST(SampleOmega, PureFunctionOfSeedStageCoordinate) {
  const auto p = make({32, 32}, {4, 4}, 10);
  const auto a = sample_omega(p, 77, 2);
  const auto b = sample_omega(p, 77, 2);
  EXPECT_EQ(a.spacers, b.spacers);
  // A one-stage draw agrees with the first stage of a two-stage draw.
  EXPECT_EQ(sample_omega(p, 77, 1).spacers[0], a.spacers[0]);
  EXPECT_EQ(spacer_draw(p, 77, 2, 5), a.stage(2)[4]);
  EXPECT_NE(sample_omega(p, 78, 2).spacers, a.spacers);
}

TEST(SampleOmega, RejectsTooManyStages) {
  const auto p = make({2}, {1}, 3);
  EXPECT_THROW(sample_omega(p, 1, 2), InvalidParams);
}

double draw_mean(const ConstructionParams& p, int count, double& var) {
  double s = 0.0;
  double s2 = 0.0;
  for (int k = 1; k <= count; ++k) {
    const double w = static_cast<double>(spacer_draw(p, 11, 1, k));
    s += w;
    s2 += w * w;
  }
  const double mean = s / count;
  var = s2 / count - mean * mean;
  return mean;
}

TEST(SampleOmega, SymmetricMeanIsZero) {
  const auto p = make({2}, {5}, 6);
  constexpr int kN = 100000;
  double var = 0.0;
  const double mean = draw_mean(p, kN, var);
  EXPECT_NEAR(var, 10.0, 0.2);
  EXPECT_LE(std::abs(mean), 3.0 * std::sqrt(10.0 / kN));
}

TEST(SampleOmega, NonNegativeMeanIsHalfT) {
  const auto p = make({2}, {4}, 6, SpacerSupport::kNonNegative);
  constexpr int kN = 100000;
  double var = 0.0;
  const double mean = draw_mean(p, kN, var);
  EXPECT_LE(std::abs(mean - 2.0), 3.0 * std::sqrt(2.0 / kN));
}

// Chi-square at significance 0.001, critical values for df = 2t or t.
TEST(SampleOmega, ChiSquareUniformity) {
  const std::map<int, double> critical{{1, 10.828}, {2, 13.816}, {3, 16.266}, {4, 18.467},
                                       {5, 20.515}, {6, 22.458}, {7, 24.322}, {8, 26.124},
                                       {10, 29.588}, {12, 32.909}, {14, 36.123}, {16, 39.252}};
  constexpr int kN = 100000;
  for (const auto support : {SpacerSupport::kSymmetric, SpacerSupport::kNonNegative}) {
    for (std::int64_t t = 1; t <= 8; ++t) {
      const auto p = make({2}, {t}, t + 1, support);
      const std::int64_t lo = p.support_min(1);
      const std::int64_t cells = p.support_size(1);
      std::vector<double> count(static_cast<std::size_t>(cells), 0.0);
      for (int k = 1; k <= kN; ++k) count[static_cast<std::size_t>(spacer_draw(p, 2024, 1, k) - lo)] += 1.0;
      const double expect = static_cast<double>(kN) / static_cast<double>(cells);
      double chi2 = 0.0;
      for (double c : count) chi2 += (c - expect) * (c - expect) / expect;
      EXPECT_LT(chi2, critical.at(static_cast<int>(cells - 1))) << "t=" << t;
    }
  }
}

TEST(Dissociation, ThreeStageChain) {
  const auto p = make({2, 2, 2}, {1, 1, 1}, 8);
  const auto h = build_heights(p);
  EXPECT_EQ(as_vector(h), (std::vector<std::int64_t>{8, 18, 38, 78}));
  const auto r = check_dissociation(p, h);
  EXPECT_TRUE(r.dissociated) << r.reason;

  // Hand evaluation for m=2, t=1: the single gap is h_j + 1 + w >= h_j, the
  // degree is at most h_j + 2. Lower degrees accumulate 0, 10, 10 + 20 = 30
  // against gaps 8, 18, 38.
  ASSERT_EQ(r.stages.size(), 3u);
  const std::vector<std::int64_t> gaps{8, 18, 38};
  const std::vector<std::int64_t> lower{0, 10, 30};
  for (std::size_t j = 0; j < 3; ++j) {
    EXPECT_EQ(r.stages[j].min_gap, gaps[j]);
    EXPECT_EQ(r.stages[j].lower_degree, lower[j]);
  }
}

TEST(Dissociation, GuardViolationIsFalse) {
  EXPECT_FALSE(check_dissociation(make({3}, {2}, 1)).dissociated);
}

TEST(Dissociation, SingleStageAlwaysTrue) {
  EXPECT_TRUE(check_dissociation(make({256}, {64}, 128)).dissociated);
  EXPECT_TRUE(check_dissociation(make({2}, {1}, 3)).dissociated);
  EXPECT_TRUE(check_dissociation(make({5}, {9}, 1, SpacerSupport::kNonNegative)).dissociated);
}

TEST(Dissociation, DetectsCollision) {
  // t_2 = 40 > h_1: stage-2 gaps can shrink below the stage-1 density reach.
  EXPECT_FALSE(check_dissociation(make({4, 4}, {1, 40}, 10)).dissociated);
}

// Brute force: no two distinct exponent combinations produce the same sum
// of differences when dissociation holds.
TEST(Dissociation, AgreesWithDenseExpansion) {
  const oracle::Params op{{2, 3}, {1, 1}, 4, true};
  const auto p = make({2, 3}, {1, 1}, 4);
  ASSERT_TRUE(check_dissociation(p).dissociated);
  for (const auto& w1 : oracle::stage_space(op, 0)) {
    for (const auto& w2 : oracle::stage_space(op, 1)) {
      const auto c = oracle::density_coefficients(
          {oracle::exponents(op, 0, w1), oracle::exponents(op, 1, w2)});
      EXPECT_NEAR(c.at(0), 1.0, 1e-15);
    }
  }
}

TEST(Presets, AllValidAndDissociated) {
  for (const auto& name : preset_names()) {
    const auto p = preset(name);
    EXPECT_NO_THROW(p.validate()) << name;
    EXPECT_TRUE(check_dissociation(p).dissociated) << name;
  }
  EXPECT_THROW(preset("nope"), InvalidParams);
  const auto d = preset("decay");
  EXPECT_EQ(d.stages, 5);
  for (int j = 1; j <= 5; ++j) EXPECT_EQ(d.m(j), 256);
  EXPECT_LT(build_heights(d)[5], std::int64_t{1} << 40);
}

}  // namespace
}  // namespace riesz
