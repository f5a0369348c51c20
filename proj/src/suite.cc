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

#include "src/suite.h"

#include <algorithm>

#include "src/combinatorics.h"
#include "src/error.h"

namespace smokegen {
namespace {

namespace fs = std::filesystem;

const EmittedDataset& DatasetFor(std::span<const EmittedDataset> datasets,
                                 std::string_view smoketest) {
  for (const EmittedDataset& ds : datasets) {
    if (ds.manifest.smoketest == smoketest) return ds;
  }
  throw ArgumentError("no dataset emitted for " + std::string(smoketest));
}

}  // namespace

std::vector<SmokeTestSpec> SelectTests(Mode mode,
                                       std::span<const std::string> names) {
  for (const std::string& name : names) {
    if (!ParseSmokeTestId(name)) {
      throw ArgumentError("unknown smoke test '" + name + "'");
    }
    if (!FindSmokeTest(name, mode)) {
      throw ArgumentError("smoke test '" + name + "' is not part of the " +
                          std::string(ModeName(mode)) + " catalog");
    }
  }
  std::vector<SmokeTestSpec> out;
  for (const SmokeTestSpec& spec : CatalogFor(mode)) {
    if (names.empty() ||
        std::find(names.begin(), names.end(), spec.name()) != names.end()) {
      out.push_back(spec);
    }
  }
  return out;
}

std::vector<EmittedDataset> GenerateCatalogData(
    Mode mode, std::span<const std::string> names, const DataConfig& config,
    const fs::path& dir) {
  std::vector<EmittedDataset> out;
  for (const SmokeTestSpec& spec : SelectTests(mode, names)) {
    out.push_back(EmitDataset(
        GenerateDataset(spec, config.seed, config.n, config.m), dir));
  }
  return out;
}

TemplateBindings SuiteBindings(const AlgorithmDescriptor& d,
                               std::span<const SmokeTestSpec> tests,
                               std::span<const EmittedDataset> datasets,
                               const DataConfig& config) {
  const std::vector<ParameterCombination> combos = Expand(d);

  TemplateBindings b;
  b.values = {
      {"descriptor_name", d.name},
      {"framework", d.framework},
      {"package", d.package},
      {"class", d.class_name},
      {"mode", std::string(ModeName(d.type))},
      {"seed", std::to_string(config.seed)},
      {"n", std::to_string(config.n)},
      {"m", std::to_string(config.m)},
  };
  std::vector<Bindings>& stanzas = b.lists["stanzas"];
  for (const SmokeTestSpec& spec : tests) {
    const EmittedDataset& ds = DatasetFor(datasets, spec.name());
    const auto& train = ds.manifest.train;
    for (const ParameterCombination& c : combos) {
      nlohmann::ordered_json params = nlohmann::ordered_json::object();
      for (const auto& [k, v] : c.assignment) params[k] = ValueToJson(v);
      Bindings s = {
          {"test_name", d.name + "_" + std::string(spec.name()) + "_" +
                            std::to_string(c.index)},
          {"smoketest", std::string(spec.name())},
          {"feature_kind", std::string(FeatureKindName(spec.feature_kind))},
          {"combination_index", std::to_string(c.index)},
          {"varied", c.varied.value_or("defaults")},
          {"params_json", params.dump()},
          {"manifest", ds.manifest_path.generic_string()},
          {"train_csv", (ds.dir() / train.csv).generic_string()},
          {"train_arff", (ds.dir() / train.arff).generic_string()},
          {"test_csv", ds.manifest.test
                           ? (ds.dir() / ds.manifest.test->csv).generic_string()
                           : std::string()},
          {"test_arff",
           ds.manifest.test
               ? (ds.dir() / ds.manifest.test->arff).generic_string()
               : std::string()},
      };
      stanzas.push_back(std::move(s));
    }
  }
  b.values["stanza_count"] = std::to_string(stanzas.size());
  return b;
}

SuiteResult EmitTestSuite(const AlgorithmDescriptor& d,
                          std::span<const std::string> tests,
                          std::string_view template_body,
                          const DataConfig& config, const fs::path& data_dir,
                          const fs::path& out_file) {
  // Validates names against the full catalog before filtering.
  SelectTests(d.type, tests);
  const std::vector<SmokeTestSpec> applicable = ApplicableTests(d, tests);

  std::vector<EmittedDataset> datasets;
  for (const SmokeTestSpec& spec : applicable) {
    datasets.push_back(EmitDataset(
        GenerateDataset(spec, config.seed, config.n, config.m), data_dir));
  }
  const TemplateBindings bindings =
      SuiteBindings(d, applicable, datasets, config);
  const std::string text = RenderTemplate(template_body, bindings);

  if (out_file.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(out_file.parent_path(), ec);
    if (ec) throw IoError(out_file.parent_path().string(), ec.message());
  }
  WriteFile(out_file, text);
  return {out_file, bindings.lists.at("stanzas").size()};
}

}  // namespace smokegen
