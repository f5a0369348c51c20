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

#include "src/descriptor.h"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <regex>
#include <set>
#include <sstream>

#include "src/error.h"

namespace smokegen {
namespace {

using Kind = DescriptorError::Kind;

// Upper bound on the number of candidates a single range may produce.
constexpr std::int64_t kMaxRangeCandidates = 1'000'000;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

int LineOf(const YAML::Node& node) {
  const YAML::Mark mark = node.Mark();
  return mark.line >= 0 ? mark.line + 1 : -1;
}

std::optional<std::int64_t> ParseInt(std::string_view s) {
  std::int64_t v = 0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || s.empty()) return std::nullopt;
  return v;
}

std::optional<double> ParseDouble(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || s.empty() || !std::isfinite(v)) {
    return std::nullopt;
  }
  return v;
}

bool IsQuoted(const YAML::Node& node) { return node.Tag() == "!"; }

std::string Scalar(const YAML::Node& node, std::string_view what) {
  if (!node.IsScalar()) {
    throw DescriptorError(Kind::kInvalidField,
                          std::string(what) + " must be a scalar", LineOf(node));
  }
  return node.Scalar();
}

// Plain YAML scalars become the narrowest matching value type; quoted
// scalars always stay strings.
ParamValue InferValue(const YAML::Node& node, std::string_view what) {
  const std::string s = Scalar(node, what);
  if (IsQuoted(node)) return s;
  if (s == "enabled") return FlagState::kEnabled;
  if (s == "disabled") return FlagState::kDisabled;
  if (s == "true" || s == "True") return true;
  if (s == "false" || s == "False") return false;
  if (auto i = ParseInt(s)) return *i;
  if (auto d = ParseDouble(s)) return *d;
  return s;
}

std::int64_t RequireInt(const YAML::Node& node, std::string_view what) {
  const std::string s = Scalar(node, what);
  auto v = ParseInt(s);
  if (!v || IsQuoted(node)) {
    throw DescriptorError(Kind::kInvalidField,
                          std::string(what) + " must be an integer, got '" +
                              s + "'",
                          LineOf(node));
  }
  return *v;
}

double RequireNumber(const YAML::Node& node, std::string_view what) {
  const std::string s = Scalar(node, what);
  auto v = ParseDouble(s);
  if (!v || IsQuoted(node)) {
    throw DescriptorError(Kind::kInvalidField,
                          std::string(what) + " must be a finite number, got '" +
                              s + "'",
                          LineOf(node));
  }
  return *v;
}

FlagState RequireFlag(const YAML::Node& node, std::string_view what) {
  const std::string s = Scalar(node, what);
  if (s == "enabled" || s == "true" || s == "True") return FlagState::kEnabled;
  if (s == "disabled" || s == "false" || s == "False") {
    return FlagState::kDisabled;
  }
  throw DescriptorError(Kind::kInvalidField,
                        std::string(what) +
                            " must be 'enabled' or 'disabled', got '" + s + "'",
                        LineOf(node));
}

// Map entries in source order, rejecting duplicate keys.
std::vector<std::pair<std::string, YAML::Node>> Entries(
    const YAML::Node& map, std::string_view what, Kind duplicate_kind) {
  if (!map.IsMap()) {
    throw DescriptorError(Kind::kInvalidField,
                          std::string(what) + " must be a mapping",
                          LineOf(map));
  }
  std::vector<std::pair<std::string, YAML::Node>> out;
  std::set<std::string> seen;
  for (const auto& kv : map) {
    const std::string key = Scalar(kv.first, "key");
    if (!seen.insert(key).second) {
      throw DescriptorError(duplicate_kind,
                            "duplicate key '" + key + "' in " + std::string(what),
                            LineOf(kv.first));
    }
    out.emplace_back(key, kv.second);
  }
  return out;
}

const YAML::Node* FindEntry(
    const std::vector<std::pair<std::string, YAML::Node>>& entries,
    std::string_view key) {
  for (const auto& [k, v] : entries) {
    if (k == key) return &v;
  }
  return nullptr;
}

ParameterSpec PinnedFromDefault(const std::string& name,
                                const YAML::Node& def) {
  ParameterSpec p;
  p.name = name;
  p.pinned = true;
  ParamValue v = InferValue(def, "default of " + name);
  if (auto* flag = std::get_if<FlagState>(&v)) {
    p.spec = FlagParam{*flag};
  } else if (auto* i = std::get_if<std::int64_t>(&v)) {
    p.spec = IntRangeParam{*i, *i, 1, *i};
  } else if (auto* d = std::get_if<double>(&v)) {
    p.spec = FloatRangeParam{*d, *d, 1.0, *d};
  } else {
    p.spec = ValueListParam{{v}, v};
  }
  return p;
}

template <class T>
void CheckRange(const std::string& name, T min, T max, T step, int line) {
  if (min > max) {
    throw DescriptorError(Kind::kInvertedRange,
                          "parameter '" + name + "': min exceeds max", line);
  }
  if (!(step > 0)) {
    throw DescriptorError(Kind::kNonPositiveStep,
                          "parameter '" + name + "': stepsize must be positive",
                          line);
  }
}

ParameterSpec ParseParameter(const std::string& name, const YAML::Node& node) {
  const int line = LineOf(node);
  if (!node.IsMap()) {
    throw DescriptorError(Kind::kInvalidField,
                          "parameter '" + name + "' must be a mapping", line);
  }
  const auto entries = Entries(node, "parameter '" + name + "'",
                               Kind::kInvalidField);
  for (const auto& [key, value] : entries) {
    static const std::set<std::string> kKnown = {"type", "min", "max",
                                                 "stepsize", "values",
                                                 "default"};
    if (!kKnown.contains(key)) {
      throw DescriptorError(Kind::kInvalidField,
                            "parameter '" + name + "': unknown key '" + key +
                                "'",
                            LineOf(value));
    }
  }

  const YAML::Node* def = FindEntry(entries, "default");
  if (def == nullptr) {
    throw DescriptorError(Kind::kMissingDefault,
                          "parameter '" + name + "' has no default", line);
  }
  const YAML::Node* type = FindEntry(entries, "type");
  if (type == nullptr) {
    if (entries.size() != 1) {
      throw DescriptorError(Kind::kMissingField,
                            "parameter '" + name + "' has no type", line);
    }
    return PinnedFromDefault(name, *def);
  }

  const std::string type_name = Scalar(*type, "type");
  const YAML::Node* min = FindEntry(entries, "min");
  const YAML::Node* max = FindEntry(entries, "max");
  const YAML::Node* step = FindEntry(entries, "stepsize");
  const bool has_range = min || max || step;
  auto require = [&](const YAML::Node* n, std::string_view field) {
    if (n == nullptr) {
      throw DescriptorError(Kind::kMissingField,
                            "parameter '" + name + "' needs '" +
                                std::string(field) + "'",
                            line);
    }
    return *n;
  };

  const YAML::Node* values_node = FindEntry(entries, "values");
  auto reject = [&](const YAML::Node* n, std::string_view field) {
    if (n != nullptr) {
      throw DescriptorError(Kind::kInvalidField,
                            "parameter '" + name + "': '" +
                                std::string(field) +
                                "' does not apply to type '" + type_name + "'",
                            LineOf(*n));
    }
  };
  const bool known_type = type_name == "flag" || type_name == "integer" ||
                          type_name == "float" || type_name == "values";
  if (known_type && type_name != "values") reject(values_node, "values");
  if (type_name == "flag" || type_name == "values") {
    reject(min, "min");
    reject(max, "max");
    reject(step, "stepsize");
  }

  ParameterSpec p;
  p.name = name;
  if (type_name == "flag") {
    p.spec = FlagParam{RequireFlag(*def, "default of " + name)};
  } else if (type_name == "integer") {
    const std::int64_t d = RequireInt(*def, "default of " + name);
    if (!has_range) {
      p.spec = IntRangeParam{d, d, 1, d};
      p.pinned = true;
    } else {
      IntRangeParam r{RequireInt(require(min, "min"), "min"),
                      RequireInt(require(max, "max"), "max"),
                      RequireInt(require(step, "stepsize"), "stepsize"), d};
      CheckRange(name, r.min, r.max, r.step, line);
      if ((r.max - r.min) / r.step >= kMaxRangeCandidates) {
        throw DescriptorError(Kind::kInvalidField,
                              "parameter '" + name + "': range too large",
                              line);
      }
      p.spec = r;
    }
  } else if (type_name == "float") {
    const double d = RequireNumber(*def, "default of " + name);
    if (!has_range) {
      p.spec = FloatRangeParam{d, d, 1.0, d};
      p.pinned = true;
    } else {
      FloatRangeParam r{RequireNumber(require(min, "min"), "min"),
                        RequireNumber(require(max, "max"), "max"),
                        RequireNumber(require(step, "stepsize"), "stepsize"),
                        d};
      CheckRange(name, r.min, r.max, r.step, line);
      if ((r.max - r.min) / r.step >= kMaxRangeCandidates) {
        throw DescriptorError(Kind::kInvalidField,
                              "parameter '" + name + "': range too large",
                              line);
      }
      p.spec = r;
    }
  } else if (type_name == "values") {
    const YAML::Node values = require(values_node, "values");
    if (!values.IsSequence()) {
      throw DescriptorError(Kind::kInvalidField,
                            "parameter '" + name + "': values must be a list",
                            LineOf(values));
    }
    if (values.size() == 0) {
      throw DescriptorError(Kind::kEmptyValueList,
                            "parameter '" + name + "': empty value list",
                            LineOf(values));
    }
    ValueListParam list;
    for (const auto& v : values) list.values.push_back(InferValue(v, "value"));
    list.default_value = InferValue(*def, "default of " + name);
    p.spec = std::move(list);
  } else {
    throw DescriptorError(Kind::kUnknownParameterType,
                          "parameter '" + name + "': unknown type '" +
                              type_name + "'",
                          LineOf(*type));
  }
  return p;
}

std::vector<FeatureKind> ParseFeatures(const YAML::Node& node) {
  if (!node.IsSequence() || node.size() == 0) {
    throw DescriptorError(Kind::kInvalidField,
                          "features must be a non-empty list", LineOf(node));
  }
  std::vector<FeatureKind> out;
  for (const auto& f : node) {
    const std::string s = Scalar(f, "feature");
    FeatureKind kind;
    if (s == "double") {
      kind = FeatureKind::kNumeric;
    } else if (s == "categorical") {
      kind = FeatureKind::kCategorical;
    } else {
      throw DescriptorError(Kind::kInvalidField,
                            "unknown feature kind '" + s + "'", LineOf(f));
    }
    if (std::find(out.begin(), out.end(), kind) == out.end()) {
      out.push_back(kind);
    }
  }
  return out;
}

void EmitValue(YAML::Emitter& out, const ParamValue& v) {
  std::visit(Overloaded{
                 [&](FlagState f) {
                   out << (f == FlagState::kEnabled ? "enabled" : "disabled");
                 },
                 [&](bool b) { out << (b ? "true" : "false"); },
                 [&](std::int64_t i) { out << std::to_string(i); },
                 [&](double d) {
                   // Keep a decimal point so the value re-parses as a double.
                   std::string s = FormatDouble(d);
                   if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
                   out << s;
                 },
                 [&](const std::string& s) {
                   out << YAML::DoubleQuoted << s;
                 },
             },
             v);
}

}  // namespace

bool SameValue(const ParamValue& a, const ParamValue& b) {
  auto numeric = [](const ParamValue& v) -> std::optional<double> {
    if (auto* i = std::get_if<std::int64_t>(&v)) return static_cast<double>(*i);
    if (auto* d = std::get_if<double>(&v)) return *d;
    return std::nullopt;
  };
  auto na = numeric(a);
  auto nb = numeric(b);
  if (na && nb) return *na == *nb;
  return a == b;
}

std::string FormatDouble(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::string FormatValue(const ParamValue& v) {
  return std::visit(
      Overloaded{
          [](FlagState f) -> std::string {
            return f == FlagState::kEnabled ? "enabled" : "disabled";
          },
          [](bool b) -> std::string { return b ? "true" : "false"; },
          [](std::int64_t i) { return std::to_string(i); },
          [](double d) { return FormatDouble(d); },
          [](const std::string& s) { return s; },
      },
      v);
}

ParamValue ParameterSpec::DefaultValue() const {
  return std::visit(
      Overloaded{
          [](const FlagParam& f) -> ParamValue { return f.default_value; },
          [](const IntRangeParam& r) -> ParamValue { return r.default_value; },
          [](const FloatRangeParam& r) -> ParamValue {
            return r.default_value;
          },
          [](const ValueListParam& l) -> ParamValue { return l.default_value; },
      },
      spec);
}

std::string_view ParameterSpec::TypeName() const {
  static constexpr std::string_view kNames[] = {"flag", "integer", "float",
                                                "values"};
  return kNames[spec.index()];
}

std::vector<ParamValue> CandidateValues(const ParameterSpec& p) {
  if (p.pinned) return {p.DefaultValue()};
  return std::visit(
      Overloaded{
          [](const FlagParam&) {
            return std::vector<ParamValue>{FlagState::kEnabled,
                                           FlagState::kDisabled};
          },
          [](const IntRangeParam& r) {
            std::vector<ParamValue> out;
            for (std::int64_t v = r.min; v <= r.max; v += r.step) {
              out.emplace_back(v);
              if (r.max - v < r.step) break;
            }
            return out;
          },
          [](const FloatRangeParam& r) {
            // Multiply instead of accumulating so the last point does not
            // drift below max.
            std::vector<ParamValue> out;
            const double slack = r.step * 1e-9;
            for (std::int64_t i = 0;; ++i) {
              const double v = r.min + static_cast<double>(i) * r.step;
              if (v > r.max + slack) break;
              out.emplace_back(std::min(v, r.max));
            }
            return out;
          },
          [](const ValueListParam& l) { return l.values; },
      },
      p.spec);
}

bool AlgorithmDescriptor::Supports(FeatureKind kind) const {
  return std::find(features.begin(), features.end(), kind) != features.end();
}

std::string_view DescriptorFeatureName(FeatureKind kind) {
  return kind == FeatureKind::kNumeric ? "double" : "categorical";
}

AlgorithmDescriptor ParseDescriptor(std::string_view source) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(source));
  } catch (const YAML::Exception& e) {
    throw DescriptorError(Kind::kSyntax, e.msg,
                          e.mark.line >= 0 ? e.mark.line + 1 : -1);
  }
  if (!root.IsMap()) {
    throw DescriptorError(Kind::kSyntax, "descriptor must be a mapping",
                          LineOf(root));
  }

  try {
    const auto entries = Entries(root, "descriptor", Kind::kInvalidField);
    static const std::set<std::string> kKnown = {
        "name",     "type",       "framework",  "package",
        "class",    "features",   "parameters", "accepted_errors"};
    for (const auto& [key, value] : entries) {
      if (!kKnown.contains(key)) {
        throw DescriptorError(Kind::kInvalidField,
                              "unknown top-level key '" + key + "'",
                              LineOf(value));
      }
    }
    auto required = [&](std::string_view key) -> const YAML::Node& {
      const YAML::Node* n = FindEntry(entries, key);
      if (n == nullptr) {
        throw DescriptorError(Kind::kMissingField,
                              "missing top-level key '" + std::string(key) +
                                  "'");
      }
      return *n;
    };

    AlgorithmDescriptor d;
    d.name = Scalar(required("name"), "name");
    if (d.name.empty()) {
      throw DescriptorError(Kind::kInvalidField, "name is empty",
                            LineOf(required("name")));
    }
    const std::string type = Scalar(required("type"), "type");
    auto mode = ParseMode(type);
    if (!mode) {
      throw DescriptorError(Kind::kInvalidField,
                            "type must be classification or clustering",
                            LineOf(required("type")));
    }
    d.type = *mode;
    if (const YAML::Node* fw = FindEntry(entries, "framework")) {
      d.framework = Scalar(*fw, "framework");
    }
    d.package = Scalar(required("package"), "package");
    d.class_name = Scalar(required("class"), "class");
    d.features = ParseFeatures(required("features"));

    if (const YAML::Node* params = FindEntry(entries, "parameters");
        params != nullptr && !params->IsNull()) {
      for (const auto& [name, node] :
           Entries(*params, "parameters", Kind::kDuplicateParameter)) {
        d.parameters.push_back(ParseParameter(name, node));
      }
    }
    if (const YAML::Node* errs = FindEntry(entries, "accepted_errors");
        errs != nullptr && !errs->IsNull()) {
      if (!errs->IsSequence()) {
        throw DescriptorError(Kind::kInvalidField,
                              "accepted_errors must be a list", LineOf(*errs));
      }
      for (const auto& e : *errs) {
        std::string pattern = Scalar(e, "accepted error pattern");
        if (pattern.starts_with("re:")) {
          try {
            std::regex(pattern.substr(3), std::regex::ECMAScript);
          } catch (const std::regex_error&) {
            throw DescriptorError(Kind::kInvalidField,
                                  "invalid regex in accepted_errors: " + pattern,
                                  LineOf(e));
          }
        }
        d.accepted_errors.push_back(std::move(pattern));
      }
    }
    return d;
  } catch (const YAML::Exception& e) {
    throw DescriptorError(Kind::kSyntax, e.msg,
                          e.mark.line >= 0 ? e.mark.line + 1 : -1);
  }
}

AlgorithmDescriptor LoadDescriptor(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path.string(), "cannot open descriptor");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return ParseDescriptor(buf.str());
  } catch (const DescriptorError& e) {
    throw DescriptorError(e.kind(), path.string() + ": " + e.what());
  }
}

std::string SerializeDescriptor(const AlgorithmDescriptor& d) {
  YAML::Emitter out;
  out << YAML::BeginMap;
  out << YAML::Key << "name" << YAML::Value << d.name;
  out << YAML::Key << "type" << YAML::Value << std::string(ModeName(d.type));
  out << YAML::Key << "framework" << YAML::Value << d.framework;
  out << YAML::Key << "package" << YAML::Value << d.package;
  out << YAML::Key << "class" << YAML::Value << d.class_name;
  out << YAML::Key << "features" << YAML::Value << YAML::Flow
      << YAML::BeginSeq;
  for (FeatureKind k : d.features) out << std::string(DescriptorFeatureName(k));
  out << YAML::EndSeq;

  out << YAML::Key << "parameters" << YAML::Value << YAML::BeginMap;
  for (const ParameterSpec& p : d.parameters) {
    out << YAML::Key << p.name << YAML::Value << YAML::BeginMap;
    if (p.pinned && !std::holds_alternative<IntRangeParam>(p.spec) &&
        !std::holds_alternative<FloatRangeParam>(p.spec)) {
      out << YAML::Key << "default" << YAML::Value;
      EmitValue(out, p.DefaultValue());
      out << YAML::EndMap;
      continue;
    }
    out << YAML::Key << "type" << YAML::Value << std::string(p.TypeName());
    std::visit(Overloaded{
                   [](const FlagParam&) {},
                   [&](const IntRangeParam& r) {
                     if (p.pinned) return;
                     out << YAML::Key << "min" << YAML::Value
                         << std::to_string(r.min);
                     out << YAML::Key << "max" << YAML::Value
                         << std::to_string(r.max);
                     out << YAML::Key << "stepsize" << YAML::Value
                         << std::to_string(r.step);
                   },
                   [&](const FloatRangeParam& r) {
                     if (p.pinned) return;
                     out << YAML::Key << "min" << YAML::Value;
                     EmitValue(out, r.min);
                     out << YAML::Key << "max" << YAML::Value;
                     EmitValue(out, r.max);
                     out << YAML::Key << "stepsize" << YAML::Value;
                     EmitValue(out, r.step);
                   },
                   [&](const ValueListParam& l) {
                     out << YAML::Key << "values" << YAML::Value << YAML::Flow
                         << YAML::BeginSeq;
                     for (const ParamValue& v : l.values) EmitValue(out, v);
                     out << YAML::EndSeq;
                   },
               },
               p.spec);
    out << YAML::Key << "default" << YAML::Value;
    EmitValue(out, p.DefaultValue());
    out << YAML::EndMap;
  }
  out << YAML::EndMap;

  if (!d.accepted_errors.empty()) {
    out << YAML::Key << "accepted_errors" << YAML::Value << YAML::BeginSeq;
    for (const std::string& e : d.accepted_errors) {
      out << YAML::DoubleQuoted << e;
    }
    out << YAML::EndSeq;
  }
  out << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

}  // namespace smokegen
