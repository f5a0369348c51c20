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

#ifndef SMOKEGEN_SRC_SUITE_H_
#define SMOKEGEN_SRC_SUITE_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "src/catalog.h"
#include "src/dataset_io.h"
#include "src/descriptor.h"
#include "src/template.h"

namespace smokegen {

// Seed used when none is given, so bare invocations are reproducible.
inline constexpr std::uint64_t kDefaultSeed = 42;

struct DataConfig {
  std::uint64_t seed = kDefaultSeed;
  std::size_t n = kDefaultInstances;
  std::size_t m = kDefaultFeatures;
};

// Catalog entries for `mode` named in `names`, in catalog order; all entries
// when `names` is empty. Throws ArgumentError for names outside the catalog.
std::vector<SmokeTestSpec> SelectTests(Mode mode,
                                       std::span<const std::string> names);

// Generates and writes one dataset per selected test.
std::vector<EmittedDataset> GenerateCatalogData(
    Mode mode, std::span<const std::string> names, const DataConfig& config,
    const std::filesystem::path& dir);

// Global and per-stanza bindings for one descriptor. Stanzas are ordered by
// (smoke test, combination index).
//
// Globals: descriptor_name framework package class mode seed n m
//          stanza_count
// Stanza:  test_name smoketest feature_kind combination_index varied
//          params_json manifest train_csv test_csv train_arff test_arff
TemplateBindings SuiteBindings(const AlgorithmDescriptor& d,
                               std::span<const SmokeTestSpec> tests,
                               std::span<const EmittedDataset> datasets,
                               const DataConfig& config);

struct SuiteResult {
  std::filesystem::path file;
  std::size_t stanzas = 0;
};

// Renders one source file holding a test per (applicable test x combination).
// Datasets are written to `data_dir` first.
SuiteResult EmitTestSuite(const AlgorithmDescriptor& d,
                          std::span<const std::string> tests,
                          std::string_view template_body,
                          const DataConfig& config,
                          const std::filesystem::path& data_dir,
                          const std::filesystem::path& out_file);

}  // namespace smokegen

#endif  // SMOKEGEN_SRC_SUITE_H_
