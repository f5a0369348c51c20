// Copyright 2026 The Smokegen Authors.
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

#include "src/combinatorics.h"

#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "src/error.h"
#include "src/random_stream.h"
#include "tests/random_descriptor.h"
#include "tests/test_util.h"

namespace smokegen {
namespace {

using ::testing::ElementsAre;

AlgorithmDescriptor Fixture(const std::string& name) {
  return LoadDescriptor(
      testing::SourcePath("fixtures/descriptors/" + name + ".yaml"));
}

ParameterSpec Flag(const std::string& name) {
  ParameterSpec p;
  p.name = name;
  p.spec = FlagParam{FlagState::kDisabled};
  return p;
}

ParameterSpec Values(const std::string& name, std::vector<ParamValue> values,
                     ParamValue def) {
  ParameterSpec p;
  p.name = name;
  p.spec = ValueListParam{std::move(values), std::move(def)};
  return p;
}

AlgorithmDescriptor Bare() {
  AlgorithmDescriptor d;
  d.name = "T";
  d.features = {FeatureKind::kNumeric};
  return d;
}

TEST(ExpandTest, ZeroParameters) {
  const auto combos = Expand(Bare());
  ASSERT_EQ(combos.size(), 1u);
  EXPECT_TRUE(combos[0].assignment.empty());
  EXPECT_FALSE(combos[0].varied.has_value());
  EXPECT_EQ(CountExhaustive(Bare()), 1u);
}

TEST(ExpandTest, SingleValueListByHand) {
  AlgorithmDescriptor d = Bare();
  d.parameters = {Values("v", {std::string("a"), std::string("b"),
                               std::string("c")},
                         std::string("a"))};
  const auto combos = Expand(d);
  ASSERT_EQ(combos.size(), 3u);
  EXPECT_EQ(*combos[0].Find("v"), ParamValue(std::string("a")));
  EXPECT_EQ(*combos[1].Find("v"), ParamValue(std::string("b")));
  EXPECT_EQ(*combos[2].Find("v"), ParamValue(std::string("c")));
  EXPECT_EQ(combos[1].varied, "v");
}

TEST(ExpandTest, DefaultOutsideCandidatesAddsEveryCandidate) {
  AlgorithmDescriptor d = Bare();
  d.parameters = {Values("C", {0.05, 0.5, 0.95}, 0.25)};
  const auto combos = Expand(d);
  ASSERT_EQ(combos.size(), 4u);
  EXPECT_EQ(*combos[0].Find("C"), ParamValue(0.25));
  EXPECT_EQ(CountExhaustive(d), 3u);
}

TEST(ExpandTest, NumericDefaultMatchesAcrossIntAndDouble) {
  AlgorithmDescriptor d = Bare();
  d.parameters = {Values("x", {std::int64_t{1}, 2.0}, 2.0)};
  EXPECT_EQ(Expand(d).size(), 2u);
}

TEST(ExpandTest, IndicesAreSequential) {
  const auto combos = Expand(Fixture("j48_pruned"));
  for (std::size_t i = 0; i < combos.size(); ++i) {
    EXPECT_EQ(combos[i].index, i);
  }
}

// Counts follow from the rule 1 + sum of non-default candidates per
// parameter, evaluated by hand over each fixture:
//   unpruned: M{1,10} d=1 -> 1, four flags -> 4          => 6
//   pruned:   M -> 1, five flags -> 5, C{.05,.5,.95} d=.25 -> 3  => 10
//   REP:      M -> 1, five flags -> 5, N{2,3,4} d=3 -> 2   => 9
TEST(ExpandTest, J48Fixtures) {
  EXPECT_EQ(Expand(Fixture("j48_unpruned")).size(), 6u);
  EXPECT_EQ(Expand(Fixture("j48_pruned")).size(), 10u);
  EXPECT_EQ(Expand(Fixture("j48_rep")).size(), 9u);
}

TEST(ExpandTest, UnprunedFixtureOrder) {
  const auto combos = Expand(Fixture("j48_unpruned"));
  std::vector<std::string> varied;
  for (const auto& c : combos) varied.push_back(c.varied.value_or("-"));
  EXPECT_THAT(varied, ElementsAre("-", "M", "O", "A",
                                  "doNotMakeSplitPointActualValue", "J"));
  EXPECT_EQ(*combos[1].Find("M"), ParamValue(std::int64_t{10}));
  EXPECT_EQ(*combos[0].Find("U"), ParamValue(FlagState::kEnabled));
}

TEST(CountExhaustiveTest, EightBinaryTwoTernary) {
  AlgorithmDescriptor d = Bare();
  for (int i = 0; i < 8; ++i) d.parameters.push_back(Flag("f" + std::to_string(i)));
  for (int i = 0; i < 2; ++i) {
    d.parameters.push_back(Values("v" + std::to_string(i),
                                  {std::int64_t{1}, std::int64_t{2},
                                   std::int64_t{3}},
                                  std::int64_t{1}));
  }
  // 2^8 * 3^2.
  EXPECT_EQ(CountExhaustive(d), 256u * 9u);
}

TEST(CountExhaustiveTest, UnprunedFixture) {
  // Pinned U contributes 1; M and the four flags contribute 2 each.
  EXPECT_EQ(CountExhaustive(Fixture("j48_unpruned")), 32u);
}

TEST(CountExhaustiveTest, OverflowDetected) {
  AlgorithmDescriptor d = Bare();
  for (int i = 0; i < 70; ++i) d.parameters.push_back(Flag("f" + std::to_string(i)));
  EXPECT_THROW(CountExhaustive(d), ArgumentError);
  EXPECT_EQ(Expand(d).size(), 71u);
}

TEST(LinearityPropertyTest, RandomDescriptors) {
  RandomStream rng(31337);
  for (int trial = 0; trial < 1000; ++trial) {
    const AlgorithmDescriptor d = testing::RandomDescriptor(rng, 20, 5);
    const auto combos = Expand(d);

    std::size_t expected = 1;
    std::size_t bound = 1;
    for (const auto& p : d.parameters) {
      const auto cands = CandidateValues(p);
      bound += cands.size();
      for (const auto& v : cands) expected += !SameValue(v, p.DefaultValue());
    }
    ASSERT_EQ(combos.size(), expected);
    ASSERT_LE(combos.size(), bound);

    const auto& base = combos[0];
    ASSERT_FALSE(base.varied.has_value());
    ASSERT_EQ(base.assignment.size(), d.parameters.size());
    for (std::size_t i = 0; i < d.parameters.size(); ++i) {
      ASSERT_EQ(base.assignment[i].first, d.parameters[i].name);
      ASSERT_TRUE(SameValue(base.assignment[i].second,
                            d.parameters[i].DefaultValue()));
    }

    for (std::size_t c = 1; c < combos.size(); ++c) {
      int diffs = 0;
      std::string diff_key;
      for (std::size_t i = 0; i < d.parameters.size(); ++i) {
        ASSERT_EQ(combos[c].assignment[i].first, d.parameters[i].name);
        if (!SameValue(combos[c].assignment[i].second,
                       base.assignment[i].second)) {
          ++diffs;
          diff_key = combos[c].assignment[i].first;
        }
      }
      ASSERT_EQ(diffs, 1);
      ASSERT_EQ(combos[c].varied, diff_key);
    }

    for (std::size_t i = 0; i < d.parameters.size(); ++i) {
      for (const auto& v : CandidateValues(d.parameters[i])) {
        bool seen = false;
        for (const auto& c : combos) seen |= SameValue(c.assignment[i].second, v);
        ASSERT_TRUE(seen) << d.parameters[i].name << "=" << FormatValue(v);
      }
    }
  }
}

TEST(ApplicableTestsTest, FiltersOnFeatureKinds) {
  AlgorithmDescriptor d = Bare();
  const auto numeric = ApplicableTests(d);
  EXPECT_EQ(numeric.size(), 16u);
  for (const auto& s : numeric) EXPECT_EQ(s.feature_kind, FeatureKind::kNumeric);
  d.features = {FeatureKind::kCategorical};
  EXPECT_EQ(ApplicableTests(d).size(), 6u);
  d.features = {FeatureKind::kNumeric, FeatureKind::kCategorical};
  EXPECT_EQ(ApplicableTests(d).size(), 22u);
  d.type = Mode::kClustering;
  EXPECT_EQ(ApplicableTests(d).size(), 16u);
  const std::vector<std::string> only = {"MAXDOUBLE", "ZEROS"};
  EXPECT_EQ(ApplicableTests(d, only).size(), 2u);
}

TEST(CampaignSizeTest, Sums) {
  EXPECT_EQ(CampaignSize({}), 0u);
  const AlgorithmDescriptor bare = Bare();
  EXPECT_EQ(CampaignSize(std::span(&bare, 1)), 16u);
  const std::vector<AlgorithmDescriptor> j48 = {
      Fixture("j48_unpruned"), Fixture("j48_pruned"), Fixture("j48_rep")};
  EXPECT_EQ(CampaignSize(j48), 22u * (6 + 10 + 9));
}

TEST(CombinationJsonTest, FlagsAsBooleans) {
  const auto combos = Expand(Fixture("j48_unpruned"));
  const auto j = CombinationToJson(combos[1]);
  EXPECT_EQ(j["index"], 1);
  EXPECT_EQ(j["varied"], "M");
  EXPECT_EQ(ValueToJson(FlagState::kEnabled), true);
  EXPECT_EQ(ValueToJson(std::int64_t{10}), 10);
  EXPECT_TRUE(CombinationToJson(combos[0])["varied"].is_null());
  EXPECT_EQ(j["assignment"].begin().key(), "U");
  EXPECT_EQ(j["assignment"]["U"], "enabled");
}

}  // namespace
}  // namespace smokegen
