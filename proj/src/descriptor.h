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

// Algorithm descriptors: which class to test, which feature kinds it takes,
// and how each hyperparameter should be varied.
//
//   name: WEKA_C45_UNPRUNED
//   type: classification
//   framework: weka
//   package: weka.classifiers.trees
//   class: J48
//   features: [double, categorical]
//   parameters:
//     U:
//       default: enabled        # pinned
//     M:
//       type: integer
//       min: 1
//       max: 10
//       stepsize: 9
//       default: 1
//   accepted_errors:
//     - "more than 1 sample"    # substring
//     - "re:^ValueError: .*"    # regex

#ifndef SMOKEGEN_SRC_DESCRIPTOR_H_
#define SMOKEGEN_SRC_DESCRIPTOR_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "src/catalog.h"
#include "src/datagen.h"

namespace smokegen {

enum class FlagState { kEnabled, kDisabled };

using ParamValue =
    std::variant<FlagState, bool, std::int64_t, double, std::string>;

// Integers and doubles compare numerically; everything else by type and value.
bool SameValue(const ParamValue& a, const ParamValue& b);

// Human-readable form: enabled, 10, 0.25, gini.
std::string FormatValue(const ParamValue& v);

// Shortest decimal that parses back to the same double.
std::string FormatDouble(double v);

struct FlagParam {
  FlagState default_value = FlagState::kDisabled;
  bool operator==(const FlagParam&) const = default;
};

struct IntRangeParam {
  std::int64_t min = 0;
  std::int64_t max = 0;
  std::int64_t step = 1;
  std::int64_t default_value = 0;
  bool operator==(const IntRangeParam&) const = default;
};

struct FloatRangeParam {
  double min = 0;
  double max = 0;
  double step = 1;
  double default_value = 0;
  bool operator==(const FloatRangeParam&) const = default;
};

struct ValueListParam {
  std::vector<ParamValue> values;
  ParamValue default_value;
  bool operator==(const ValueListParam&) const = default;
};

struct ParameterSpec {
  std::string name;
  std::variant<FlagParam, IntRangeParam, FloatRangeParam, ValueListParam> spec;
  // Only a default was given; the candidate set is {default}.
  bool pinned = false;

  ParamValue DefaultValue() const;
  std::string_view TypeName() const;
  bool operator==(const ParameterSpec&) const = default;
};

// Candidate values in declaration order. Flags yield (enabled, disabled),
// ranges the progression min, min + step, ... <= max, pinned specs only the
// default.
std::vector<ParamValue> CandidateValues(const ParameterSpec& spec);

struct AlgorithmDescriptor {
  std::string name;
  Mode type = Mode::kClassification;
  std::string framework;
  std::string package;
  std::string class_name;
  std::vector<FeatureKind> features;
  // Declaration order; expansion order depends on it.
  std::vector<ParameterSpec> parameters;
  std::vector<std::string> accepted_errors;

  bool Supports(FeatureKind kind) const;
  bool operator==(const AlgorithmDescriptor&) const = default;
};

// Parses and validates descriptor text. Throws DescriptorError.
AlgorithmDescriptor ParseDescriptor(std::string_view source);

// Throws IoError or DescriptorError.
AlgorithmDescriptor LoadDescriptor(const std::filesystem::path& path);

// Inverse of ParseDescriptor on the typed model.
std::string SerializeDescriptor(const AlgorithmDescriptor& d);

// Descriptor spelling of a feature kind: "double" or "categorical".
std::string_view DescriptorFeatureName(FeatureKind kind);

}  // namespace smokegen

#endif  // SMOKEGEN_SRC_DESCRIPTOR_H_
