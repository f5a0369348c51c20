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

#include <filesystem>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "src/catalog.h"
#include "src/combinatorics.h"
#include "src/dataset_io.h"
#include "src/error.h"
#include "src/suite.h"
#include "src/template.h"
#include "tests/test_util.h"

namespace smokegen {
namespace {

namespace fs = std::filesystem;
using ::testing::ElementsAre;
using ::testing::HasSubstr;
using ::testing::StartsWith;
using testing::Slurp;
using testing::TempDir;

Dataset Make(std::string_view name, std::size_t n, std::size_t m,
             Mode mode = Mode::kClassification) {
  return GenerateDataset(*FindSmokeTest(name, mode), 42, n, m);
}

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

// CSV

TEST(WriteCsvTest, HeaderAndRowShape) {
  TempDir dir;
  const Dataset ds = Make("UNIFORM", 1, 2);
  const auto paths = WriteCsv(ds, dir.path());
  ASSERT_EQ(paths.size(), 1u);
  EXPECT_EQ(paths[0].filename(), "UNIFORM.csv");
  const auto lines = Lines(Slurp(paths[0]));
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0], "feature_1,feature_2,class");
  EXPECT_THAT(lines[1], ::testing::MatchesRegex("[0-9.e-]+,[0-9.e-]+,class_[01]"));
}

TEST(WriteCsvTest, ClusteringHasNoClassColumn) {
  TempDir dir;
  const Dataset ds = Make("UNIFORM", 3, 2, Mode::kClustering);
  const auto paths = WriteCsv(ds, dir.path());
  ASSERT_EQ(paths.size(), 1u);
  EXPECT_EQ(paths[0].filename(), "UNIFORM_clustering.csv");
  EXPECT_EQ(Lines(Slurp(paths[0]))[0], "feature_1,feature_2");
}

TEST(WriteCsvTest, DistinctPartitionsGetTwoFiles) {
  TempDir dir;
  const auto paths = WriteCsv(Make("DISJNUM", 4, 2), dir.path());
  ASSERT_EQ(paths.size(), 2u);
  EXPECT_EQ(paths[0].filename(), "DISJNUM_train.csv");
  EXPECT_EQ(paths[1].filename(), "DISJNUM_test.csv");
}

TEST(WriteCsvTest, ExtremeValuesRoundTripExactly) {
  TempDir dir;
  for (const char* name : {"MAXDOUBLE", "MINDOUBLE", "LEFTSKEW", "SPLIT"}) {
    const Dataset ds = Make(name, 50, 3);
    const auto paths = WriteCsv(ds, dir.path());
    const TablePartition back = ReadCsv(paths[0]);
    ASSERT_EQ(back.columns.size(), 3u);
    for (std::size_t j = 0; j < 3; ++j) {
      EXPECT_EQ(back.columns[j], ds.train_features[j].numeric()) << name;
    }
    EXPECT_EQ(back.labels, ds.train_labels);
  }
}

TEST(WriteCsvTest, CategoricalValuesAreIntegers) {
  TempDir dir;
  const Dataset ds = Make("CATEGORICAL", 20, 2);
  const auto lines = Lines(Slurp(WriteCsv(ds, dir.path())[0]));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    EXPECT_THAT(lines[i], ::testing::MatchesRegex("[0-9],[0-9],class_[01]"));
  }
}

// ARFF

TEST(WriteArffTest, NumericAttributes) {
  TempDir dir;
  const auto paths = WriteArff(Make("UNIFORM", 3, 2), "rel", dir.path());
  const auto lines = Lines(Slurp(paths[0]));
  EXPECT_EQ(lines[0], "@relation rel");
  EXPECT_THAT(lines, ::testing::Contains("@attribute feature_1 numeric"));
  EXPECT_THAT(lines, ::testing::Contains("@attribute feature_2 numeric"));
  EXPECT_THAT(lines, ::testing::Contains("@attribute class {class_0,class_1}"));
  EXPECT_THAT(lines, ::testing::Contains("@data"));
}

TEST(WriteArffTest, StarvedBinaryDeclaresBothCategories) {
  TempDir dir;
  const Dataset ds = Make("STARVEDBINARY", 5, 3);
  const auto paths = WriteArff(ds, "sb", dir.path());
  const std::string text = Slurp(paths[0]);
  EXPECT_THAT(text, HasSubstr("@attribute feature_1 {0,1}"));
  EXPECT_THAT(text, HasSubstr("@attribute feature_2 {0,1}"));
  const TablePartition back = ReadArff(paths[0]);
  EXPECT_THAT(back.declared_categories[0], ElementsAre(0, 1));
  EXPECT_THAT(back.columns[0], ::testing::Each(0.0));
  EXPECT_THAT(back.columns[1], ::testing::Each(1.0));
}

TEST(WriteArffTest, DeclaredOrderMatchesMetadata) {
  TempDir dir;
  const Dataset ds = Make("DISJCAT", 10, 1);
  const auto paths = WriteArff(ds, "d", dir.path());
  ASSERT_EQ(paths.size(), 2u);
  for (const auto& p : paths) {
    const TablePartition back = ReadArff(p);
    EXPECT_EQ(back.declared_categories[0],
              ds.train_features[0].declared_categories());
  }
}

TEST(ArffCsvAgreementTest, AllClassificationTests) {
  TempDir dir;
  for (const SmokeTestSpec& s : ClassificationTests()) {
    const Dataset ds = GenerateDataset(s, 7, 30, 3);
    const EmittedDataset e = EmitDataset(ds, dir.path());
    const TablePartition csv = ReadCsv(e.TrainCsv());
    const TablePartition arff = ReadArff(e.dir() / e.manifest.train.arff);
    EXPECT_EQ(csv.columns, arff.columns) << s.name();
    EXPECT_EQ(csv.labels, arff.labels) << s.name();
    EXPECT_EQ(csv.feature_names, arff.feature_names) << s.name();
    ASSERT_EQ(csv.columns.size(), 3u);
    for (std::size_t j = 0; j < 3; ++j) {
      for (std::size_t i = 0; i < 30; ++i) {
        EXPECT_EQ(csv.columns[j][i], ds.train_features[j].ValueAt(i));
      }
    }
  }
}

// Manifest

TEST(ManifestTest, JsonRoundTrip) {
  TempDir dir;
  const EmittedDataset e = EmitDataset(Make("DISJCAT", 5, 2), dir.path());
  EXPECT_EQ(ReadManifest(e.manifest_path), e.manifest);
  EXPECT_EQ(ManifestFromJson(nlohmann::json::parse(
                ManifestToJson(e.manifest).dump())),
            e.manifest);
  EXPECT_TRUE(e.manifest.distinct_test);
  ASSERT_TRUE(e.manifest.test.has_value());
  EXPECT_EQ(e.manifest.test->csv, "DISJCAT_test.csv");
}

TEST(ManifestTest, NumericFeaturesHaveNullCategories) {
  TempDir dir;
  const EmittedDataset e = EmitDataset(Make("UNIFORM", 5, 2), dir.path());
  const auto j = nlohmann::json::parse(Slurp(e.manifest_path));
  EXPECT_EQ(j["v"], 1);
  EXPECT_TRUE(j["declared_categories"][0].is_null());
  EXPECT_EQ(j["label_strategy"], "rectangle");
}

TEST(ManifestTest, MalformedRejected) {
  EXPECT_THROW(ManifestFromJson(nlohmann::json::parse("{\"v\": 2}")),
               ArgumentError);
  EXPECT_THROW(ManifestFromJson(nlohmann::json::parse("[]")), ArgumentError);
}

// Every file in the output directory is named by some manifest, and every
// file a manifest names exists.
TEST(ManifestTest, Completeness) {
  TempDir dir;
  const auto emitted =
      GenerateCatalogData(Mode::kClassification, {}, {}, dir.path());
  EXPECT_EQ(emitted.size(), 22u);
  std::set<fs::path> referenced;
  for (const auto& e : emitted) {
    referenced.insert(e.manifest_path.filename());
    for (const PartitionFiles* p : {&e.manifest.train, e.manifest.test ? &*e.manifest.test : nullptr}) {
      if (p == nullptr) continue;
      referenced.insert(p->csv);
      referenced.insert(p->arff);
      EXPECT_TRUE(fs::exists(e.dir() / p->csv));
      EXPECT_TRUE(fs::exists(e.dir() / p->arff));
    }
  }
  std::set<fs::path> on_disk;
  for (const auto& entry : fs::directory_iterator(dir.path())) {
    on_disk.insert(entry.path().filename());
  }
  EXPECT_EQ(on_disk, referenced);
}

TEST(GenerateCatalogDataTest, ByteDeterministic) {
  TempDir a, b;
  GenerateCatalogData(Mode::kClassification, {}, {}, a.path());
  GenerateCatalogData(Mode::kClassification, {}, {}, b.path());
  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(a.path())) {
    ++files;
    EXPECT_EQ(Slurp(entry.path()), Slurp(b / entry.path().filename().string()))
        << entry.path();
  }
  EXPECT_GT(files, 22u * 3);
}

TEST(GenerateCatalogDataTest, RejectsUnknownAndWrongModeNames) {
  TempDir dir;
  const std::vector<std::string> unknown = {"NOPE"};
  EXPECT_THROW(GenerateCatalogData(Mode::kClassification, unknown, {}, dir.path()),
               ArgumentError);
  const std::vector<std::string> wrong_mode = {"RANDCAT"};
  EXPECT_THROW(GenerateCatalogData(Mode::kClustering, wrong_mode, {}, dir.path()),
               ArgumentError);
}

TEST(IoTest, UnwritableDirectoryNamesPath) {
  try {
    WriteFile("/proc/nonexistent/x.csv", "x");
    FAIL();
  } catch (const IoError& e) {
    EXPECT_THAT(e.what(), HasSubstr("/proc/nonexistent/x.csv"));
  }
  EXPECT_THROW(ReadFile("/nonexistent/file"), IoError);
}

// Templates

TEST(RenderTemplateTest, Substitution) {
  TemplateBindings b;
  b.values["name"] = "x";
  EXPECT_EQ(RenderTemplate("hello {{name}}", b), "hello x");
  EXPECT_EQ(RenderTemplate("{{name}}{{name}}", b), "xx");
  EXPECT_EQ(RenderTemplate("no markers", b), "no markers");
}

TEST(RenderTemplateTest, MissingBindingNamesPlaceholder) {
  try {
    RenderTemplate("hello {{name}}", {});
    FAIL();
  } catch (const TemplateError& e) {
    EXPECT_THAT(e.what(), HasSubstr("'name'"));
  }
}

TEST(RenderTemplateTest, EachBlock) {
  TemplateBindings b;
  b.values["who"] = "g";
  b.lists["items"] = {{{"v", "1"}}, {{"v", "2"}, {"who", "s"}}};
  EXPECT_EQ(RenderTemplate("[{{#each items}}{{v}}{{who}};{{/each}}]", b),
            "[1g;2s;]");
}

TEST(RenderTemplateTest, EmptyList) {
  TemplateBindings b;
  b.lists["items"] = {};
  EXPECT_EQ(RenderTemplate("a{{#each items}}x{{/each}}b", b), "ab");
}

TEST(RenderTemplateTest, MalformedMarkers) {
  TemplateBindings b;
  b.lists["items"] = {};
  b.values["x"] = "1";
  EXPECT_THROW(RenderTemplate("{{x", b), TemplateError);
  EXPECT_THROW(RenderTemplate("{{#each items}}", b), TemplateError);
  EXPECT_THROW(RenderTemplate("{{/each}}", b), TemplateError);
  EXPECT_THROW(
      RenderTemplate("{{#each items}}{{#each items}}{{/each}}{{/each}}", b),
      TemplateError);
  EXPECT_THROW(RenderTemplate("{{#each nothing}}{{/each}}", b), TemplateError);
  EXPECT_THROW(RenderTemplate("{{bad name}}", b), TemplateError);
}

// Suites

AlgorithmDescriptor Unpruned() {
  return LoadDescriptor(
      testing::SourcePath("fixtures/descriptors/j48_unpruned.yaml"));
}

constexpr char kStanzaTemplate[] =
    "# {{descriptor_name}} {{stanza_count}}\n"
    "{{#each stanzas}}def test_{{test_name}}(): "
    "fit('{{train_csv}}', '{{test_csv}}', {{params_json}})\n{{/each}}";

TEST(EmitTestSuiteTest, OneStanzaPerTestAndCombination) {
  TempDir dir;
  const SuiteResult r = EmitTestSuite(Unpruned(), {}, kStanzaTemplate, {},
                                      dir / "data", dir / "suite.py");
  // 22 applicable tests x 6 combinations.
  EXPECT_EQ(r.stanzas, 22u * 6u);
  const auto lines = Lines(Slurp(r.file));
  EXPECT_EQ(lines[0], "# WEKA_C45_UNPRUNED 132");
  EXPECT_EQ(lines.size(), 133u);
  EXPECT_THAT(lines[1], StartsWith("def test_WEKA_C45_UNPRUNED_UNIFORM_0()"));
  std::set<std::string> names(lines.begin(), lines.end());
  EXPECT_EQ(names.size(), lines.size());
}

TEST(EmitTestSuiteTest, ShippedTemplateRendersFixture) {
  TempDir dir;
  const std::vector<std::string> tests = {"UNIFORM"};
  const SuiteResult r = EmitTestSuite(
      Unpruned(), tests,
      ReadFile(testing::SourcePath("templates/python_unittest.py.tmpl")), {},
      dir / "data", dir / "suite.py");
  EXPECT_EQ(r.stanzas, 6u);
  const std::string text = Slurp(r.file);
  EXPECT_THAT(text, HasSubstr("def test_WEKA_C45_UNPRUNED_UNIFORM_5(self)"));
  EXPECT_THAT(text, HasSubstr("\"M\":10"));
  EXPECT_THAT(text, ::testing::Not(HasSubstr("{{")));
}

TEST(EmitTestSuiteTest, NoApplicableTestsGivesSkeleton) {
  TempDir dir;
  AlgorithmDescriptor d = Unpruned();
  d.features = {FeatureKind::kNumeric};
  const std::vector<std::string> tests = {"CATEGORICAL"};
  const SuiteResult r = EmitTestSuite(d, tests, kStanzaTemplate, {},
                                      dir / "data", dir / "suite.py");
  EXPECT_EQ(r.stanzas, 0u);
  EXPECT_EQ(Slurp(r.file), "# WEKA_C45_UNPRUNED 0\n");
}

TEST(EmitTestSuiteTest, ClusteringStanzasHaveNoTestPartition) {
  TempDir dir;
  AlgorithmDescriptor d = Unpruned();
  d.type = Mode::kClustering;
  const std::vector<std::string> tests = {"UNIFORM"};
  const SuiteResult r =
      EmitTestSuite(d, tests, "{{#each stanzas}}[{{test_csv}}]{{/each}}", {},
                    dir / "data", dir / "suite.txt");
  EXPECT_EQ(r.stanzas, 6u);
  EXPECT_EQ(Slurp(r.file), "[][][][][][]");
}

TEST(EmitTestSuiteTest, TemplateErrorPropagates) {
  TempDir dir;
  EXPECT_THROW(EmitTestSuite(Unpruned(), {}, "{{unknown}}", {}, dir / "data",
                             dir / "suite.py"),
               TemplateError);
}

TEST(SelectTestsTest, CatalogOrderRegardlessOfRequestOrder) {
  const std::vector<std::string> names = {"ZEROS", "UNIFORM"};
  const auto specs = SelectTests(Mode::kClassification, names);
  ASSERT_EQ(specs.size(), 2u);
  EXPECT_EQ(specs[0].name(), "UNIFORM");
  EXPECT_EQ(specs[1].name(), "ZEROS");
}

}  // namespace
}  // namespace smokegen
