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

#include "src/datagen.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "src/error.h"

namespace smokegen {

std::string_view FeatureKindName(FeatureKind kind) {
  return kind == FeatureKind::kNumeric ? "numeric" : "categorical";
}

std::string_view LabelName(Label label) {
  return label == Label::kClass0 ? "class_0" : "class_1";
}

FeatureColumn FeatureColumn::Numeric(std::vector<double> values) {
  FeatureColumn c;
  c.kind_ = FeatureKind::kNumeric;
  c.numeric_ = std::move(values);
  return c;
}

FeatureColumn FeatureColumn::Categorical(std::vector<std::int64_t> ids,
                                         std::vector<std::int64_t> declared) {
  std::vector<std::int64_t> sorted = declared;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ArgumentError("declared categories contain duplicates");
  }
  for (std::int64_t id : ids) {
    if (id < 0 || !std::binary_search(sorted.begin(), sorted.end(), id)) {
      throw ArgumentError("category id " + std::to_string(id) +
                          " is not declared");
    }
  }
  FeatureColumn c;
  c.kind_ = FeatureKind::kCategorical;
  c.ids_ = std::move(ids);
  c.declared_ = std::move(declared);
  return c;
}

std::size_t FeatureColumn::size() const {
  return is_numeric() ? numeric_.size() : ids_.size();
}

double FeatureColumn::ValueAt(std::size_t i) const {
  return is_numeric() ? numeric_[i] : static_cast<double>(ids_[i]);
}

FeatureColumn SampleUniform(RandomStream& rng, std::size_t n, double lo,
                            double hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw ArgumentError("uniform bounds must be finite");
  }
  if (lo > hi) throw ArgumentError("uniform bounds are inverted");

  const double width = hi - lo;  // may overflow to inf for huge spans
  std::vector<double> values;
  values.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = rng.NextUnit();
    double v = std::isfinite(width) ? lo + width * u : lo * (1.0 - u) + hi * u;
    if (v >= hi && hi > lo) v = std::nextafter(hi, lo);
    if (v < lo) v = lo;
    values.push_back(v);
  }
  return FeatureColumn::Numeric(std::move(values));
}

namespace {

// Marsaglia & Tsang (2000), valid for shape >= 1.
double GammaAtLeastOne(RandomStream& rng, double shape) {
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  while (true) {
    double x;
    double v;
    do {
      x = rng.NextNormal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.NextUnit();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
    if (u > 0.0 && std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) {
      return d * v;
    }
  }
}

double GammaUnitScale(RandomStream& rng, double shape) {
  if (shape >= 1.0) return GammaAtLeastOne(rng, shape);
  // Gamma(a) = Gamma(a + 1) * U^(1/a).
  const double g = GammaAtLeastOne(rng, shape + 1.0);
  const double u = rng.NextUnit();
  return g * std::pow(u, 1.0 / shape);
}

}  // namespace

FeatureColumn SampleGamma(RandomStream& rng, std::size_t n, GammaSpec spec) {
  if (!(spec.shape > 0.0) || !(spec.scale > 0.0) ||
      !std::isfinite(spec.shape) || !std::isfinite(spec.scale)) {
    throw ArgumentError("gamma shape and scale must be positive");
  }
  std::vector<double> values;
  values.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    values.push_back(GammaUnitScale(rng, spec.shape) * spec.scale);
  }
  return FeatureColumn::Numeric(std::move(values));
}

std::int64_t CategoryFromUniform(double u, std::int64_t k) {
  auto id = static_cast<std::int64_t>(std::floor(static_cast<double>(k) * u));
  return std::clamp<std::int64_t>(id, 0, k - 1);
}

CategoricalSample SampleCategoricalUniform(RandomStream& rng, std::size_t n,
                                           std::int64_t k) {
  if (k < 1) throw ArgumentError("category count must be at least 1");
  std::vector<double> uniforms;
  std::vector<std::int64_t> ids;
  uniforms.reserve(n);
  ids.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = rng.NextUnit();
    uniforms.push_back(u);
    ids.push_back(CategoryFromUniform(u, k));
  }
  std::vector<std::int64_t> declared(static_cast<std::size_t>(k));
  for (std::int64_t c = 0; c < k; ++c) declared[c] = c;
  return {FeatureColumn::Categorical(std::move(ids), std::move(declared)),
          std::move(uniforms)};
}

double EmpiricalQuantile(std::span<const double> values, double p) {
  if (values.empty()) throw ArgumentError("quantile of an empty sequence");
  if (!(p > 0.0) || p > 1.0) throw ArgumentError("quantile p must be in (0, 1]");
  std::vector<double> sorted(values.begin(), values.end());
  const auto n = static_cast<double>(sorted.size());
  auto rank = static_cast<std::size_t>(std::ceil(p * n));
  rank = std::clamp<std::size_t>(rank, 1, sorted.size());
  std::nth_element(sorted.begin(), sorted.begin() + (rank - 1), sorted.end());
  return sorted[rank - 1];
}

LabelVector RectangleLabels(std::span<const std::vector<double>> columns) {
  if (columns.empty()) throw ArgumentError("rectangle labels need m >= 1");
  const std::size_t n = columns.front().size();
  for (const auto& col : columns) {
    if (col.size() != n) throw ArgumentError("ragged feature columns");
  }
  if (n == 0) return {};

  const double p = std::pow(2.0, -1.0 / static_cast<double>(columns.size()));
  std::vector<double> thresholds;
  thresholds.reserve(columns.size());
  for (const auto& col : columns) thresholds.push_back(EmpiricalQuantile(col, p));

  LabelVector labels(n, Label::kClass1);
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!(columns[j][i] < thresholds[j])) labels[i] = Label::kClass0;
    }
  }
  return labels;
}

LabelVector ApplyLabelNoise(RandomStream& rng, LabelVector labels, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw ArgumentError("noise p must be in [0, 1]");
  for (Label& l : labels) {
    if (rng.NextUnit() < p) l = Flip(l);
  }
  return labels;
}

LabelVector RandomLabels(RandomStream& rng, std::size_t n) {
  LabelVector labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(rng.NextUnit() < 0.5 ? Label::kClass1 : Label::kClass0);
  }
  return labels;
}

}  // namespace smokegen
