// Copyright 2026 The CTRP Authors.
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


#include "ctrp/baselines.h"

#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "ctrp/error.h"

namespace ctrp {
namespace {

constexpr TrialResult kUp = TrialResult::kUp;
constexpr TrialResult kNo = TrialResult::kNoDiff;
constexpr TrialResult kDown = TrialResult::kDown;

TEST(MajorityTest, LabelAndTies) {
  std::vector<TrialResult> all_up = {kUp, kUp};
  EXPECT_EQ(MajorityLabel(all_up), kUp);
  std::vector<TrialResult> tie = {kUp, kDown, kNo};
  EXPECT_EQ(MajorityLabel(tie), kNo);
  std::vector<TrialResult> up_down = {kUp, kDown, kDown, kUp};
  EXPECT_EQ(MajorityLabel(up_down), kUp);
  EXPECT_THROW(MajorityLabel({}), Error);
}

TEST(MajorityTest, Metrics) {
  std::vector<TrialResult> train = {kUp, kUp, kNo};
  std::vector<TrialResult> balanced = {kUp, kNo, kDown, kUp, kNo, kDown};
  Metrics m = MajorityBaseline(train, balanced);
  EXPECT_DOUBLE_EQ(m.accuracy, 1.0 / 3);
  // Recall 1, precision 1/3 for up; the other classes score 0.
  EXPECT_DOUBLE_EQ(m.f1[0], 0.5);
  EXPECT_DOUBLE_EQ(m.macro_f1_3way, 0.5 / 3);
}

TEST(MajorityTest, PrevalenceOf4176) {
  std::vector<TrialResult> test;
  for (int i = 0; i < 4176; ++i) test.push_back(kNo);
  for (int i = 0; i < 5824; ++i) test.push_back(i % 2 ? kUp : kDown);
  std::vector<TrialResult> train = {kNo};
  Metrics m = MajorityBaseline(train, test);
  EXPECT_NEAR(m.accuracy * 100, 41.76, 1e-9);
  EXPECT_NEAR(m.macro_f1_3way * 100, 19.64, 0.01);
}

TEST(RandomTest, AccuracyIsOneThird) {
  for (auto dist : {std::array<double, 3>{1, 0, 0},
                    std::array<double, 3>{0.2, 0.5, 0.3},
                    std::array<double, 3>{1.0 / 3, 1.0 / 3, 1.0 / 3}}) {
    EXPECT_DOUBLE_EQ(RandomBaselineExpected(dist).accuracy, 1.0 / 3);
  }
  EXPECT_THROW(RandomBaselineExpected({0.5, 0.5, 0.5}), Error);
  EXPECT_THROW(RandomBaselineExpected({1.5, -0.5, 0}), Error);
}

TEST(RandomTest, TwoWayF1FixesThreeWayF1) {
  // With 41.76% no-difference, a 2-way F1 of 30.62 fixes the
  // up/down split; the 3-way F1 of 32.77 must then follow.
  auto f1 = [](double pi) { return 2 * pi / (3 * pi + 1); };
  const double rest = 1 - 0.4176;
  double lo = rest / 2, hi = rest;
  for (int i = 0; i < 100; ++i) {
    const double mid = (lo + hi) / 2;
    (f1(mid) + f1(rest - mid) > 2 * 0.3062 ? lo : hi) = mid;
  }
  const std::array<double, 3> dist = {lo, 0.4176, rest - lo};
  Metrics m = RandomBaselineExpected(dist);
  EXPECT_NEAR(m.accuracy * 100, 33.33, 0.005);
  EXPECT_NEAR(m.macro_f1_2way * 100, 30.62, 1e-6);
  EXPECT_NEAR(m.macro_f1_3way * 100, 32.77, 0.01);
}

TEST(RandomTest, PlugInMatchesMonteCarlo) {
  const std::array<double, 3> dist = {0.35, 0.42, 0.23};
  Metrics expected = RandomBaselineExpected(dist);
  std::mt19937_64 rng(77);
  std::discrete_distribution<int> gold(dist.begin(), dist.end());
  std::uniform_int_distribution<int> guess(0, 2);
  ConfusionMatrix conf;
  for (int i = 0; i < 100000; ++i) {
    conf.Add(kAllResults[gold(rng)], kAllResults[guess(rng)]);
  }
  Metrics simulated = ComputeMetrics(conf);
  EXPECT_NEAR(simulated.accuracy * 100, expected.accuracy * 100, 0.3);
  EXPECT_NEAR(simulated.macro_f1_3way * 100, expected.macro_f1_3way * 100,
              0.3);
  EXPECT_NEAR(simulated.macro_f1_2way * 100, expected.macro_f1_2way * 100,
              0.3);
}

TEST(RandomTest, LabelDistribution) {
  std::vector<TrialResult> labels = {kUp, kUp, kNo, kDown};
  EXPECT_EQ(LabelDistribution(labels),
            (std::array<double, 3>{0.5, 0.25, 0.25}));
}

}  // namespace
}  // namespace ctrp
