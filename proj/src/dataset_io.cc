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

#include "src/dataset_io.h"

#include <cerrno>
#include <charconv>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string_view>

#include "src/descriptor.h"
#include "src/error.h"

namespace smokegen {
namespace {

namespace fs = std::filesystem;

std::vector<std::string_view> SplitFields(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

double ParseNumber(std::string_view s, const fs::path& path, std::size_t line) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw IoError(path.string(), "line " + std::to_string(line) +
                                     ": not a number: '" + std::string(s) + "'");
  }
  return v;
}

Label ParseLabel(std::string_view s, const fs::path& path, std::size_t line) {
  if (s == "class_0") return Label::kClass0;
  if (s == "class_1") return Label::kClass1;
  throw IoError(path.string(), "line " + std::to_string(line) +
                                   ": bad label '" + std::string(s) + "'");
}

void AppendValue(std::string& out, const FeatureColumn& c, std::size_t i) {
  if (c.is_numeric()) {
    out += FormatDouble(c.numeric()[i]);
  } else {
    out += std::to_string(c.ids()[i]);
  }
}

std::string CsvText(const std::vector<FeatureColumn>& features,
                    const LabelVector& labels, bool labeled) {
  std::string out;
  for (std::size_t j = 0; j < features.size(); ++j) {
    if (j > 0) out += ',';
    out += "feature_" + std::to_string(j + 1);
  }
  if (labeled) out += ",class";
  out += '\n';
  const std::size_t n = features.empty() ? 0 : features.front().size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < features.size(); ++j) {
      if (j > 0) out += ',';
      AppendValue(out, features[j], i);
    }
    if (labeled) {
      out += ',';
      out += LabelName(labels[i]);
    }
    out += '\n';
  }
  return out;
}

std::string ArffText(const std::string& relation,
                     const std::vector<FeatureColumn>& features,
                     const LabelVector& labels, bool labeled) {
  std::string out = "@relation " + relation + "\n\n";
  for (std::size_t j = 0; j < features.size(); ++j) {
    out += "@attribute feature_" + std::to_string(j + 1) + ' ';
    const FeatureColumn& c = features[j];
    if (c.is_numeric()) {
      out += "numeric";
    } else {
      out += '{';
      const auto& declared = c.declared_categories();
      for (std::size_t k = 0; k < declared.size(); ++k) {
        if (k > 0) out += ',';
        out += std::to_string(declared[k]);
      }
      out += '}';
    }
    out += '\n';
  }
  if (labeled) out += "@attribute class {class_0,class_1}\n";
  out += "\n@data\n";
  const std::size_t n = features.empty() ? 0 : features.front().size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < features.size(); ++j) {
      if (j > 0) out += ',';
      AppendValue(out, features[j], i);
    }
    if (labeled) {
      out += ',';
      out += LabelName(labels[i]);
    }
    out += '\n';
  }
  return out;
}

std::string Suffix(bool distinct, std::string_view partition) {
  return distinct ? "_" + std::string(partition) : std::string();
}

nlohmann::ordered_json FilesToJson(const PartitionFiles& f) {
  return {{"csv", f.csv.generic_string()}, {"arff", f.arff.generic_string()}};
}

PartitionFiles FilesFromJson(const nlohmann::json& j) {
  return {j.at("csv").get<std::string>(), j.at("arff").get<std::string>()};
}

}  // namespace

void WriteFile(const fs::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path.string(), std::strerror(errno));
  out << contents;
  out.close();
  if (!out) throw IoError(path.string(), "write failed");
}

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path.string(), std::strerror(errno));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string DatasetStem(const Dataset& ds) {
  std::string stem(SmokeTestName(ds.id));
  if (ds.mode == Mode::kClustering) stem += "_clustering";
  return stem;
}

fs::path EmittedDataset::TestCsv() const {
  return manifest.test ? dir() / manifest.test->csv : fs::path();
}

std::vector<fs::path> WriteCsv(const Dataset& ds, const fs::path& dir) {
  const std::string stem = DatasetStem(ds);
  std::vector<fs::path> paths;
  paths.push_back(dir / (stem + Suffix(ds.distinct_test, "train") + ".csv"));
  WriteFile(paths.back(),
            CsvText(ds.train_features, ds.train_labels, ds.labeled()));
  if (ds.distinct_test) {
    paths.push_back(dir / (stem + "_test.csv"));
    WriteFile(paths.back(),
              CsvText(ds.test_features, ds.test_labels, ds.labeled()));
  }
  return paths;
}

std::vector<fs::path> WriteArff(const Dataset& ds, const std::string& relation,
                                const fs::path& dir) {
  const std::string stem = DatasetStem(ds);
  std::vector<fs::path> paths;
  const std::string train_name = stem + Suffix(ds.distinct_test, "train");
  paths.push_back(dir / (train_name + ".arff"));
  WriteFile(paths.back(),
            ArffText(relation + Suffix(ds.distinct_test, "train"),
                     ds.train_features, ds.train_labels, ds.labeled()));
  if (ds.distinct_test) {
    paths.push_back(dir / (stem + "_test.arff"));
    WriteFile(paths.back(), ArffText(relation + "_test", ds.test_features,
                                     ds.test_labels, ds.labeled()));
  }
  return paths;
}

EmittedDataset EmitDataset(const Dataset& ds, const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError(dir.string(), ec.message());

  const std::vector<fs::path> csv = WriteCsv(ds, dir);
  const std::vector<fs::path> arff = WriteArff(ds, DatasetStem(ds), dir);

  Manifest m;
  m.smoketest = std::string(SmokeTestName(ds.id));
  m.mode = ds.mode;
  m.seed = ds.seed;
  m.n = ds.n;
  m.m = ds.m;
  m.label_strategy = std::string(LabelStrategyName(
      ds.labeled() ? ClassificationTests()[static_cast<std::size_t>(ds.id)]
                         .label_strategy
                   : LabelStrategy::kNone));
  for (const FeatureColumn& c : ds.train_features) {
    m.feature_kinds.push_back(c.kind());
    m.declared_categories.push_back(c.declared_categories());
  }
  m.train = {csv[0].filename(), arff[0].filename()};
  if (ds.labeled()) {
    m.test = ds.distinct_test
                 ? PartitionFiles{csv[1].filename(), arff[1].filename()}
                 : m.train;
  }
  m.distinct_test = ds.distinct_test;

  EmittedDataset out{dir / (DatasetStem(ds) + ".manifest.json"), m};
  WriteFile(out.manifest_path, ManifestToJson(m).dump() + "\n");
  return out;
}

nlohmann::ordered_json ManifestToJson(const Manifest& m) {
  nlohmann::ordered_json j;
  j["v"] = kManifestVersion;
  j["smoketest"] = m.smoketest;
  j["mode"] = std::string(ModeName(m.mode));
  j["seed"] = m.seed;
  j["n"] = m.n;
  j["m"] = m.m;
  j["label_strategy"] = m.label_strategy;
  nlohmann::ordered_json kinds = nlohmann::ordered_json::array();
  for (FeatureKind k : m.feature_kinds) kinds.push_back(std::string(FeatureKindName(k)));
  j["feature_kinds"] = std::move(kinds);
  nlohmann::ordered_json declared = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m.declared_categories.size(); ++i) {
    if (m.feature_kinds[i] == FeatureKind::kNumeric) {
      declared.push_back(nullptr);
    } else {
      declared.push_back(m.declared_categories[i]);
    }
  }
  j["declared_categories"] = std::move(declared);
  j["train"] = FilesToJson(m.train);
  j["test"] = m.test ? FilesToJson(*m.test) : nlohmann::ordered_json(nullptr);
  j["distinct_test"] = m.distinct_test;
  return j;
}

Manifest ManifestFromJson(const nlohmann::json& j) {
  try {
    if (j.at("v").get<int>() != kManifestVersion) {
      throw ArgumentError("unsupported manifest version");
    }
    Manifest m;
    m.smoketest = j.at("smoketest").get<std::string>();
    auto mode = ParseMode(j.at("mode").get<std::string>());
    if (!mode) throw ArgumentError("manifest has an unknown mode");
    m.mode = *mode;
    m.seed = j.at("seed").get<std::uint64_t>();
    m.n = j.at("n").get<std::size_t>();
    m.m = j.at("m").get<std::size_t>();
    m.label_strategy = j.at("label_strategy").get<std::string>();
    for (const auto& k : j.at("feature_kinds")) {
      const auto s = k.get<std::string>();
      if (s == "numeric") {
        m.feature_kinds.push_back(FeatureKind::kNumeric);
      } else if (s == "categorical") {
        m.feature_kinds.push_back(FeatureKind::kCategorical);
      } else {
        throw ArgumentError("manifest has an unknown feature kind '" + s + "'");
      }
    }
    for (const auto& d : j.at("declared_categories")) {
      m.declared_categories.push_back(
          d.is_null() ? std::vector<std::int64_t>{}
                      : d.get<std::vector<std::int64_t>>());
    }
    if (m.declared_categories.size() != m.feature_kinds.size()) {
      throw ArgumentError("manifest feature metadata lengths differ");
    }
    m.train = FilesFromJson(j.at("train"));
    if (!j.at("test").is_null()) m.test = FilesFromJson(j.at("test"));
    m.distinct_test = j.at("distinct_test").get<bool>();
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("malformed manifest: ") + e.what());
  }
}

Manifest ReadManifest(const fs::path& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(ReadFile(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw IoError(path.string(), e.what());
  }
  return ManifestFromJson(j);
}

TablePartition ReadCsv(const fs::path& path) {
  std::istringstream in(ReadFile(path));
  std::string line;
  if (!std::getline(in, line)) throw IoError(path.string(), "empty CSV file");
  TablePartition t;
  bool labeled = false;
  for (std::string_view f : SplitFields(Trim(line), ',')) {
    if (f == "class") {
      labeled = true;
    } else {
      t.feature_names.emplace_back(f);
    }
  }
  t.columns.resize(t.feature_names.size());
  const std::size_t width = t.feature_names.size() + (labeled ? 1 : 0);
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view row = Trim(line);
    if (row.empty()) continue;
    const auto fields = SplitFields(row, ',');
    if (fields.size() != width) {
      throw IoError(path.string(),
                    "line " + std::to_string(line_no) + ": expected " +
                        std::to_string(width) + " fields");
    }
    for (std::size_t j = 0; j < t.columns.size(); ++j) {
      t.columns[j].push_back(ParseNumber(fields[j], path, line_no));
    }
    if (labeled) t.labels.push_back(ParseLabel(fields.back(), path, line_no));
  }
  return t;
}

TablePartition ReadArff(const fs::path& path) {
  std::istringstream in(ReadFile(path));
  std::string line;
  TablePartition t;
  bool labeled = false;
  bool in_data = false;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view row = Trim(line);
    if (row.empty() || row.front() == '%') continue;
    if (!in_data) {
      if (row.starts_with("@relation")) continue;
      if (row.starts_with("@data")) {
        in_data = true;
        t.columns.resize(t.feature_names.size());
        continue;
      }
      if (!row.starts_with("@attribute ")) {
        throw IoError(path.string(), "line " + std::to_string(line_no) +
                                         ": unexpected header line");
      }
      row.remove_prefix(std::strlen("@attribute "));
      const std::size_t space = row.find(' ');
      const std::string name(row.substr(0, space));
      const std::string_view type =
          space == std::string_view::npos ? "" : Trim(row.substr(space + 1));
      if (name == "class") {
        labeled = true;
        continue;
      }
      t.feature_names.push_back(name);
      std::vector<std::int64_t> declared;
      if (type.starts_with("{") && type.ends_with("}")) {
        for (std::string_view c :
             SplitFields(type.substr(1, type.size() - 2), ',')) {
          declared.push_back(
              static_cast<std::int64_t>(ParseNumber(Trim(c), path, line_no)));
        }
      }
      t.declared_categories.push_back(std::move(declared));
      continue;
    }
    const auto fields = SplitFields(row, ',');
    const std::size_t width = t.columns.size() + (labeled ? 1 : 0);
    if (fields.size() != width) {
      throw IoError(path.string(),
                    "line " + std::to_string(line_no) + ": expected " +
                        std::to_string(width) + " fields");
    }
    for (std::size_t j = 0; j < t.columns.size(); ++j) {
      t.columns[j].push_back(ParseNumber(fields[j], path, line_no));
    }
    if (labeled) t.labels.push_back(ParseLabel(fields.back(), path, line_no));
  }
  return t;
}

}  // namespace smokegen
