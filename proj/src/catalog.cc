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

#include "src/catalog.h"

#include <algorithm>
#include <array>
#include <string>
#include <utility>

#include "src/error.h"

namespace smokegen {
namespace {

using enum SmokeTestId;
constexpr auto kNum = FeatureKind::kNumeric;
constexpr auto kCat = FeatureKind::kCategorical;
constexpr auto kRect = LabelStrategy::kRectangle;
constexpr auto kRand = LabelStrategy::kRandom;
constexpr auto kSame = TestPartitionRule::kSameAsTrain;
constexpr auto kDistinct = TestPartitionRule::kDistinct;

constexpr std::array<std::string_view, kNumClassificationTests> kNames = {
    "UNIFORM",  "CATEGORICAL", "MINFLOAT",    "VERYSMALL",    "MINDOUBLE",
    "MAXFLOAT", "VERYLARGE",   "MAXDOUBLE",   "SPLIT",        "LEFTSKEW",
    "RIGHTSKEW", "ONECLASS",   "BIAS",        "OUTLIER",      "ZEROS",
    "RANDNUM",  "RANDCAT",     "DISJNUM",     "DISJCAT",      "MANYCATS",
    "STARVEDMANY", "STARVEDBINARY",
};

const std::vector<SmokeTestSpec> kClassification = {
    {kUniform, kNum, kRect, kSame, "uniform values in [0, 1]"},
    {kCategorical, kCat, kRect, kSame, "ten equally likely categories"},
    {kMinFloat, kNum, kRect, kSame, "uniform in [0, 1e-6], near float epsilon"},
    {kVerySmall, kNum, kRect, kSame, "uniform in [0, 1e-10]"},
    {kMinDouble, kNum, kRect, kSame,
     "uniform in [0, 1e-15], near double epsilon"},
    {kMaxFloat, kNum, kRect, kSame, "uniform in [0, 3.4e38], near float max"},
    {kVeryLarge, kNum, kRect, kSame, "uniform in [0, 1e100]"},
    {kMaxDouble, kNum, kRect, kSame,
     "uniform in [0, 1.7e308], near double max"},
    {kSplit, kNum, kRand, kSame,
     "bimodal: [0, 1e-5] or [1e10, 1e11] with equal odds per value"},
    {kLeftSkew, kNum, kRect, kSame, "negated Gamma(0.1, 4.0)"},
    {kRightSkew, kNum, kRect, kSame, "Gamma(0.1, 4.0)"},
    {kOneClass, kNum, LabelStrategy::kOneClass, kSame,
     "uniform in [0, 1], every instance in class_0"},
    {kBias, kNum, LabelStrategy::kBias, kSame,
     "uniform in [0, 1], a single class_1 instance"},
    {kOutlier, kNum, kRect, kSame,
     "uniform in [0, 1e-5] plus one instance at 1e10 in every feature"},
    {kZeros, kNum, kRect, kSame, "every value is 0.0"},
    {kRandNum, kNum, kRand, kSame, "uniform in [0, 1], uninformative labels"},
    {kRandCat, kCat, kRand, kSame, "two categories, uninformative labels"},
    {kDisjNum, kNum, kRect, kDistinct,
     "train uniform in [0, 1], test uniform in [100, 101]"},
    {kDisjCat, kCat, kRect, kDistinct,
     "train categories 0-9, test categories 10-19"},
    {kManyCats, kCat, kRect, kSame, "10000 declared categories per feature"},
    {kStarvedMany, kCat, kRand, kSame,
     "a distinct category per instance in every feature"},
    {kStarvedBinary, kCat, kRect, kSame,
     "two declared categories, only one observed per feature"},
};

// Entries that are identical to UNIFORM or CATEGORICAL once labels and the
// test partition are gone.
constexpr std::array kClusteringDuplicates = {kRandNum, kOneClass, kBias,
                                              kDisjNum, kRandCat, kDisjCat};

std::vector<SmokeTestSpec> BuildClustering() {
  std::vector<SmokeTestSpec> out;
  for (SmokeTestSpec spec : kClassification) {
    if (std::find(kClusteringDuplicates.begin(), kClusteringDuplicates.end(),
                  spec.id) != kClusteringDuplicates.end()) {
      continue;
    }
    spec.label_strategy = LabelStrategy::kNone;
    spec.test_partition = kSame;
    out.push_back(spec);
  }
  return out;
}

struct Partition {
  std::vector<FeatureColumn> columns;
  // Per-feature values the rectangle rule is evaluated on: the numeric values
  // themselves, or the uniforms underneath categorical draws.
  std::vector<std::vector<double>> basis;
};

void AddNumeric(Partition& p, FeatureColumn column) {
  p.basis.push_back(column.numeric());
  p.columns.push_back(std::move(column));
}

void AddCategorical(Partition& p, std::vector<double> uniforms,
                    std::int64_t k, std::int64_t offset,
                    std::vector<std::int64_t> declared) {
  std::vector<std::int64_t> ids;
  ids.reserve(uniforms.size());
  for (double u : uniforms) ids.push_back(offset + CategoryFromUniform(u, k));
  p.columns.push_back(
      FeatureColumn::Categorical(std::move(ids), std::move(declared)));
  p.basis.push_back(std::move(uniforms));
}

std::vector<std::int64_t> Iota(std::int64_t count) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) v[i] = i;
  return v;
}

std::vector<double> Uniforms(RandomStream rng, std::size_t n) {
  std::vector<double> u(n);
  for (double& x : u) x = rng.NextUnit();
  return u;
}

Partition MakePartition(SmokeTestId id, const RandomStream& stream,
                        std::size_t n, std::size_t m, bool test) {
  Partition p;
  for (std::size_t j = 0; j < m; ++j) {
    RandomStream rng = stream.Derive(j);
    switch (id) {
      case kUniform:
      case kOneClass:
      case kBias:
      case kRandNum:
        AddNumeric(p, SampleUniform(rng, n, 0.0, 1.0));
        break;
      case kMinFloat:
        AddNumeric(p, SampleUniform(rng, n, 0.0, 1e-6));
        break;
      case kVerySmall:
        AddNumeric(p, SampleUniform(rng, n, 0.0, 1e-10));
        break;
      case kMinDouble:
        AddNumeric(p, SampleUniform(rng, n, 0.0, 1e-15));
        break;
      case kMaxFloat:
        AddNumeric(p, SampleUniform(rng, n, 0.0, 3.4e38));
        break;
      case kVeryLarge:
        AddNumeric(p, SampleUniform(rng, n, 0.0, 1e100));
        break;
      case kMaxDouble:
        AddNumeric(p, SampleUniform(rng, n, 0.0, 1.7e308));
        break;
      case kOutlier:
        AddNumeric(p, SampleUniform(rng, n, 0.0, 1e-5));
        break;
      case kDisjNum:
        AddNumeric(p, test ? SampleUniform(rng, n, 100.0, 101.0)
                           : SampleUniform(rng, n, 0.0, 1.0));
        break;
      case kSplit: {
        std::vector<double> values;
        values.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
          const bool low = rng.Bernoulli(0.5);
          const double u = rng.NextUnit();
          values.push_back(low ? 1e-5 * u : 1e10 + 9e10 * u);
        }
        AddNumeric(p, FeatureColumn::Numeric(std::move(values)));
        break;
      }
      case kRightSkew:
        AddNumeric(p, SampleGamma(rng, n, {0.1, 4.0}));
        break;
      case kLeftSkew: {
        FeatureColumn c = SampleGamma(rng, n, {0.1, 4.0});
        for (double& v : c.mutable_numeric()) v = -v;
        AddNumeric(p, std::move(c));
        break;
      }
      case kZeros:
        AddNumeric(p, FeatureColumn::Numeric(std::vector<double>(n, 0.0)));
        break;
      case kCategorical:
        AddCategorical(p, Uniforms(rng, n), 10, 0, Iota(10));
        break;
      case kRandCat:
        AddCategorical(p, Uniforms(rng, n), 2, 0, Iota(2));
        break;
      case kDisjCat:
        AddCategorical(p, Uniforms(rng, n), 10, test ? 10 : 0, Iota(20));
        break;
      case kManyCats:
        AddCategorical(p, Uniforms(rng, n), 10000, 0, Iota(10000));
        break;
      case kStarvedMany: {
        const auto count = static_cast<std::int64_t>(n);
        std::vector<double> basis(n);
        for (std::size_t i = 0; i < n; ++i) basis[i] = static_cast<double>(i);
        p.columns.push_back(FeatureColumn::Categorical(Iota(count), Iota(count)));
        p.basis.push_back(std::move(basis));
        break;
      }
      case kStarvedBinary: {
        const auto observed = static_cast<std::int64_t>(j % 2);
        p.columns.push_back(FeatureColumn::Categorical(
            std::vector<std::int64_t>(n, observed), {0, 1}));
        p.basis.emplace_back(n, static_cast<double>(observed));
        break;
      }
    }
  }
  return p;
}

LabelVector MakeLabels(const SmokeTestSpec& spec, const Partition& p,
                       const RandomStream& root, std::string_view partition,
                       std::size_t n) {
  switch (spec.label_strategy) {
    case LabelStrategy::kRectangle: {
      RandomStream noise = root.Derive("noise/" + std::string(partition));
      return ApplyLabelNoise(noise, RectangleLabels(p.basis), 0.1);
    }
    case LabelStrategy::kRandom: {
      RandomStream rng = root.Derive("labels/" + std::string(partition));
      return RandomLabels(rng, n);
    }
    case LabelStrategy::kOneClass:
      return LabelVector(n, Label::kClass0);
    case LabelStrategy::kBias: {
      LabelVector labels(n, Label::kClass0);
      labels.back() = Label::kClass1;
      return labels;
    }
    case LabelStrategy::kNone:
      break;
  }
  return {};
}

// The catalog's classification entry for an id; the recipe always comes from
// there, clustering only strips labels.
const SmokeTestSpec& ClassificationSpec(SmokeTestId id) {
  return kClassification[static_cast<std::size_t>(id)];
}

}  // namespace

std::string_view ModeName(Mode mode) {
  return mode == Mode::kClassification ? "classification" : "clustering";
}

std::optional<Mode> ParseMode(std::string_view name) {
  if (name == "classification") return Mode::kClassification;
  if (name == "clustering") return Mode::kClustering;
  return std::nullopt;
}

std::string_view LabelStrategyName(LabelStrategy s) {
  switch (s) {
    case LabelStrategy::kRectangle:
      return "rectangle";
    case LabelStrategy::kRandom:
      return "random";
    case LabelStrategy::kOneClass:
      return "one_class";
    case LabelStrategy::kBias:
      return "bias";
    case LabelStrategy::kNone:
      break;
  }
  return "none";
}

std::string_view SmokeTestName(SmokeTestId id) {
  return kNames[static_cast<std::size_t>(id)];
}

std::string_view SmokeTestSpec::name() const { return SmokeTestName(id); }

std::optional<SmokeTestId> ParseSmokeTestId(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return static_cast<SmokeTestId>(i);
  }
  return std::nullopt;
}

const std::vector<SmokeTestSpec>& ClassificationTests() {
  return kClassification;
}

const std::vector<SmokeTestSpec>& ClusteringTests() {
  static const std::vector<SmokeTestSpec> tests = BuildClustering();
  return tests;
}

const std::vector<SmokeTestSpec>& CatalogFor(Mode mode) {
  return mode == Mode::kClassification ? ClassificationTests()
                                       : ClusteringTests();
}

std::optional<SmokeTestSpec> FindSmokeTest(std::string_view name, Mode mode) {
  for (const SmokeTestSpec& spec : CatalogFor(mode)) {
    if (spec.name() == name) return spec;
  }
  return std::nullopt;
}

Dataset GenerateDataset(const SmokeTestSpec& spec, std::uint64_t seed,
                        std::size_t n, std::size_t m) {
  if (n == 0) throw ArgumentError("instance count n must be at least 1");
  if (m == 0) throw ArgumentError("feature count m must be at least 1");
  if (spec.id == kStarvedBinary && m < 2) {
    throw ArgumentError("STARVEDBINARY requires m >= 2 features");
  }

  const Mode mode = spec.label_strategy == LabelStrategy::kNone
                        ? Mode::kClustering
                        : Mode::kClassification;
  const SmokeTestSpec& recipe = ClassificationSpec(spec.id);
  const RandomStream root = RandomStream(seed).Derive(recipe.name());

  Dataset ds;
  ds.id = spec.id;
  ds.mode = mode;
  ds.seed = seed;
  ds.n = n;
  ds.m = m;
  Partition train = MakePartition(spec.id, root.Derive("train"), n, m, false);

  if (mode == Mode::kClassification) {
    ds.train_labels = MakeLabels(recipe, train, root, "train", n);
    if (recipe.test_partition == kDistinct) {
      Partition test = MakePartition(spec.id, root.Derive("test"), n, m, true);
      ds.test_labels = MakeLabels(recipe, test, root, "test", n);
      ds.test_features = std::move(test.columns);
      ds.distinct_test = true;
    }
  }
  ds.train_features = std::move(train.columns);

  // Labels above were computed before the outlier is injected.
  if (spec.id == kOutlier) {
    for (FeatureColumn& c : ds.train_features) c.mutable_numeric().back() = 1e10;
  }

  if (mode == Mode::kClassification && !ds.distinct_test) {
    ds.test_features = ds.train_features;
    ds.test_labels = ds.train_labels;
  }
  return ds;
}

}  // namespace smokegen
