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

// Deterministic primitive generators: feature distributions, empirical
// quantiles, rectangle and random labels, label noise.

#ifndef SMOKEGEN_SRC_DATAGEN_H_
#define SMOKEGEN_SRC_DATAGEN_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "src/random_stream.h"

namespace smokegen {

enum class FeatureKind { kNumeric, kCategorical };

std::string_view FeatureKindName(FeatureKind kind);

// One feature of a dataset. Numeric columns hold doubles; categorical columns
// hold non-negative category ids plus the declared category set, which may
// contain ids that never occur in the data.
class FeatureColumn {
 public:
  static FeatureColumn Numeric(std::vector<double> values);
  // Throws ArgumentError if an id is missing from `declared`.
  static FeatureColumn Categorical(std::vector<std::int64_t> ids,
                                   std::vector<std::int64_t> declared);

  FeatureKind kind() const { return kind_; }
  bool is_numeric() const { return kind_ == FeatureKind::kNumeric; }
  std::size_t size() const;

  // Valid only for the matching kind.
  const std::vector<double>& numeric() const { return numeric_; }
  std::vector<double>& mutable_numeric() { return numeric_; }
  const std::vector<std::int64_t>& ids() const { return ids_; }
  const std::vector<std::int64_t>& declared_categories() const {
    return declared_;
  }

  // Value i as a double regardless of kind.
  double ValueAt(std::size_t i) const;

  bool operator==(const FeatureColumn&) const = default;

 private:
  FeatureColumn() = default;

  FeatureKind kind_ = FeatureKind::kNumeric;
  std::vector<double> numeric_;
  std::vector<std::int64_t> ids_;
  std::vector<std::int64_t> declared_;
};

enum class Label : std::uint8_t { kClass0 = 0, kClass1 = 1 };
using LabelVector = std::vector<Label>;

std::string_view LabelName(Label label);
inline Label Flip(Label l) {
  return l == Label::kClass0 ? Label::kClass1 : Label::kClass0;
}

struct GammaSpec {
  double shape;  // kappa
  double scale;  // theta
};

// Values in [lo, hi). Throws ArgumentError on non-finite or inverted bounds.
FeatureColumn SampleUniform(RandomStream& rng, std::size_t n, double lo,
                            double hi);

// Gamma(shape, scale) via Marsaglia-Tsang, with the U^(1/shape) boost for
// shape < 1.
FeatureColumn SampleGamma(RandomStream& rng, std::size_t n, GammaSpec spec);

struct CategoricalSample {
  FeatureColumn column;
  // Underlying uniforms u with id = floor(k * u); used for rectangle labels.
  std::vector<double> uniforms;
};

// k equally likely categories {0, ..., k-1}.
CategoricalSample SampleCategoricalUniform(RandomStream& rng, std::size_t n,
                                           std::int64_t k);

// floor(k * u) for u in [0, 1), clamped to k - 1.
std::int64_t CategoryFromUniform(double u, std::int64_t k);

// Nearest-rank quantile: element ceil(p * n) (1-based) of the sorted values.
// Requires non-empty values and 0 < p <= 1.
double EmpiricalQuantile(std::span<const double> values, double p);

// class_1 iff every feature value lies strictly below that feature's
// 2^(-1/m) empirical quantile. Throws ArgumentError on ragged input.
LabelVector RectangleLabels(std::span<const std::vector<double>> columns);

// Flips each label independently with probability p.
LabelVector ApplyLabelNoise(RandomStream& rng, LabelVector labels,
                            double p = 0.1);

// Fair-coin labels.
LabelVector RandomLabels(RandomStream& rng, std::size_t n);

}  // namespace smokegen

#endif  // SMOKEGEN_SRC_DATAGEN_H_
