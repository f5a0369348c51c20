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

// On-disk dataset formats.
//
// CSV: header feature_1,...,feature_m[,class]; numeric values in shortest
// round-trip decimal form, categorical values as integer ids, labels as
// class_0/class_1. CSV cannot express declared categories, so every dataset
// also gets a JSON manifest (the source of truth for metadata) and an ARFF
// copy whose nominal attributes list every declared category.
//
// A partition whose test data equals its training data is written once; the
// manifest then points both partitions at the same files.

#ifndef SMOKEGEN_SRC_DATASET_IO_H_
#define SMOKEGEN_SRC_DATASET_IO_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "src/catalog.h"

namespace smokegen {

inline constexpr int kManifestVersion = 1;

struct PartitionFiles {
  std::filesystem::path csv;
  std::filesystem::path arff;
  bool operator==(const PartitionFiles&) const = default;
};

struct Manifest {
  std::string smoketest;
  Mode mode = Mode::kClassification;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  std::string label_strategy;
  std::vector<FeatureKind> feature_kinds;
  // Per feature; empty for numeric features.
  std::vector<std::vector<std::int64_t>> declared_categories;
  // File names relative to the manifest's directory.
  PartitionFiles train;
  std::optional<PartitionFiles> test;
  bool distinct_test = false;

  bool operator==(const Manifest&) const = default;
};

nlohmann::ordered_json ManifestToJson(const Manifest& m);
// Throws ArgumentError on a malformed manifest.
Manifest ManifestFromJson(const nlohmann::json& j);
Manifest ReadManifest(const std::filesystem::path& path);

struct EmittedDataset {
  std::filesystem::path manifest_path;
  Manifest manifest;

  std::filesystem::path dir() const { return manifest_path.parent_path(); }
  std::filesystem::path TrainCsv() const { return dir() / manifest.train.csv; }
  std::filesystem::path TestCsv() const;
};

// Base file name for a dataset: the test id, suffixed for clustering.
std::string DatasetStem(const Dataset& ds);

// Writes the CSV files for every partition. Returns the paths written.
std::vector<std::filesystem::path> WriteCsv(const Dataset& ds,
                                            const std::filesystem::path& dir);

// Writes ARFF files; `relation` prefixes each file's @relation name.
std::vector<std::filesystem::path> WriteArff(const Dataset& ds,
                                             const std::string& relation,
                                             const std::filesystem::path& dir);

// CSV, ARFF and the manifest in one go. Creates `dir` if needed.
EmittedDataset EmitDataset(const Dataset& ds, const std::filesystem::path& dir);

// A partition read back from disk. Categorical ids come back as doubles.
struct TablePartition {
  std::vector<std::string> feature_names;
  std::vector<std::vector<double>> columns;
  LabelVector labels;  // empty for unlabeled files
  // ARFF only: declared categories per attribute (empty for numeric).
  std::vector<std::vector<std::int64_t>> declared_categories;
};

TablePartition ReadCsv(const std::filesystem::path& path);
TablePartition ReadArff(const std::filesystem::path& path);

// Writes `contents` to `path`, throwing IoError with the cause on failure.
void WriteFile(const std::filesystem::path& path, const std::string& contents);
std::string ReadFile(const std::filesystem::path& path);

}  // namespace smokegen

#endif  // SMOKEGEN_SRC_DATASET_IO_H_
