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

#ifndef SMOKEGEN_SRC_CATALOG_H_
#define SMOKEGEN_SRC_CATALOG_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "src/datagen.h"

namespace smokegen {

// Catalog order is the declaration order.
enum class SmokeTestId {
  kUniform,
  kCategorical,
  kMinFloat,
  kVerySmall,
  kMinDouble,
  kMaxFloat,
  kVeryLarge,
  kMaxDouble,
  kSplit,
  kLeftSkew,
  kRightSkew,
  kOneClass,
  kBias,
  kOutlier,
  kZeros,
  kRandNum,
  kRandCat,
  kDisjNum,
  kDisjCat,
  kManyCats,
  kStarvedMany,
  kStarvedBinary,
};

inline constexpr std::size_t kNumClassificationTests = 22;

enum class Mode { kClassification, kClustering };

std::string_view ModeName(Mode mode);
std::optional<Mode> ParseMode(std::string_view name);

enum class LabelStrategy { kRectangle, kRandom, kOneClass, kBias, kNone };
std::string_view LabelStrategyName(LabelStrategy s);

enum class TestPartitionRule { kSameAsTrain, kDistinct };

struct SmokeTestSpec {
  SmokeTestId id;
  FeatureKind feature_kind;
  // kNone for clustering entries.
  LabelStrategy label_strategy;
  TestPartitionRule test_partition;
  std::string_view description;

  std::string_view name() const;
  bool noisy() const { return label_strategy == LabelStrategy::kRectangle; }
};

std::string_view SmokeTestName(SmokeTestId id);
std::optional<SmokeTestId> ParseSmokeTestId(std::string_view name);

// The 22 classification tests in catalog order.
const std::vector<SmokeTestSpec>& ClassificationTests();

// Classification catalog with labels and test partitions dropped, and entries
// that collapse onto UNIFORM or CATEGORICAL removed.
const std::vector<SmokeTestSpec>& ClusteringTests();

const std::vector<SmokeTestSpec>& CatalogFor(Mode mode);

// Looks up `name` in the catalog for `mode`.
std::optional<SmokeTestSpec> FindSmokeTest(std::string_view name, Mode mode);

inline constexpr std::size_t kDefaultInstances = 100;
inline constexpr std::size_t kDefaultFeatures = 10;

struct Dataset {
  SmokeTestId id;
  Mode mode;
  std::uint64_t seed;
  std::size_t n;
  std::size_t m;
  std::vector<FeatureColumn> train_features;
  LabelVector train_labels;  // empty for clustering
  // Empty for clustering. Equal to the train partition unless
  // `distinct_test` is set.
  std::vector<FeatureColumn> test_features;
  LabelVector test_labels;
  bool distinct_test = false;

  FeatureKind feature_kind() const { return train_features.front().kind(); }
  bool labeled() const { return mode == Mode::kClassification; }
};

// Builds the dataset for one catalog entry. All draws come from sub-streams of
// `seed` keyed on the test name, partition and feature index. Throws
// ArgumentError for n == 0, m == 0, or m < 2 on STARVEDBINARY.
Dataset GenerateDataset(const SmokeTestSpec& spec, std::uint64_t seed,
                        std::size_t n = kDefaultInstances,
                        std::size_t m = kDefaultFeatures);

}  // namespace smokegen

#endif  // SMOKEGEN_SRC_CATALOG_H_
