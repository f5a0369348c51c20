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

#include <cstdlib>
#include <cstring>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "smokegen/smokegen.h"
#include "src/catalog.h"
#include "src/combinatorics.h"
#include "src/dataset_io.h"
#include "src/descriptor.h"
#include "src/error.h"
#include "src/mock_adapter.h"
#include "src/report.h"
#include "src/runner.h"
#include "src/suite.h"

struct sg_descriptor {
  smokegen::AlgorithmDescriptor d;
};

namespace {

using namespace smokegen;

thread_local std::string last_error;

sg_status Fail(sg_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Maps exceptions thrown by the core onto status codes.
template <class F>
sg_status Guard(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const ArgumentError& e) {
    return Fail(SG_ERR_INVALID_ARGUMENT, e.what());
  } catch (const DescriptorError& e) {
    return Fail(SG_ERR_DESCRIPTOR, e.what());
  } catch (const IoError& e) {
    return Fail(SG_ERR_IO, e.what());
  } catch (const TemplateError& e) {
    return Fail(SG_ERR_TEMPLATE, e.what());
  } catch (const CampaignError& e) {
    return Fail(SG_ERR_CAMPAIGN, e.what());
  } catch (const std::exception& e) {
    return Fail(SG_ERR_INTERNAL, e.what());
  } catch (...) {
    return Fail(SG_ERR_INTERNAL, "unknown error");
  }
}

char* Dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p != nullptr) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

std::vector<std::string> Strings(const char* const* items, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (items[i] == nullptr) throw ArgumentError("null string in list");
    out.emplace_back(items[i]);
  }
  return out;
}

Mode ToMode(sg_mode m) {
  return m == SG_MODE_CLUSTERING ? Mode::kClustering : Mode::kClassification;
}

DataConfig ToDataConfig(const sg_data_options* o) {
  DataConfig c;
  if (o != nullptr) {
    c.seed = o->seed;
    c.n = o->n;
    c.m = o->m;
  }
  return c;
}

void FillResult(const Summary& s, sg_run_result* out) {
  if (out == nullptr) return;
  out->total = s.total;
  for (std::size_t i = 0; i < SG_OUTCOME_COUNT; ++i) out->counts[i] = s.counts[i];
  out->failures = s.Failures();
}

std::string ExpandText(const AlgorithmDescriptor& d) {
  const auto combos = Expand(d);
  std::string out = d.name + ": " + std::to_string(combos.size()) +
                    " combinations (exhaustive " +
                    std::to_string(CountExhaustive(d)) + ")\n";
  for (const ParameterCombination& c : combos) {
    out += "  #" + std::to_string(c.index) + " " +
           (c.varied ? "vary " + *c.varied : std::string("defaults")) + ":";
    for (const auto& [k, v] : c.assignment) out += " " + k + "=" + FormatValue(v);
    out += "\n";
  }
  return out;
}

}  // namespace

extern "C" {

const char* sg_version(void) { return kToolVersion.data(); }

const char* sg_last_error(void) { return last_error.c_str(); }

void sg_string_free(char* s) { std::free(s); }

sg_status sg_descriptor_load(const char* path, sg_descriptor** out) {
  return Guard([&] {
    if (path == nullptr || out == nullptr) {
      return Fail(SG_ERR_INVALID_ARGUMENT, "null argument");
    }
    *out = new sg_descriptor{LoadDescriptor(path)};
    return SG_OK;
  });
}

sg_status sg_descriptor_parse(const char* text, sg_descriptor** out) {
  return Guard([&] {
    if (text == nullptr || out == nullptr) {
      return Fail(SG_ERR_INVALID_ARGUMENT, "null argument");
    }
    *out = new sg_descriptor{ParseDescriptor(text)};
    return SG_OK;
  });
}

void sg_descriptor_free(sg_descriptor* d) { delete d; }

const char* sg_descriptor_name(const sg_descriptor* d) {
  return d == nullptr ? "" : d->d.name.c_str();
}

sg_mode sg_descriptor_mode(const sg_descriptor* d) {
  return d != nullptr && d->d.type == Mode::kClustering
             ? SG_MODE_CLUSTERING
             : SG_MODE_CLASSIFICATION;
}

sg_status sg_descriptor_serialize(const sg_descriptor* d, char** out) {
  return Guard([&] {
    if (d == nullptr || out == nullptr) {
      return Fail(SG_ERR_INVALID_ARGUMENT, "null argument");
    }
    *out = Dup(SerializeDescriptor(d->d));
    return SG_OK;
  });
}

sg_status sg_descriptor_counts(const sg_descriptor* d, uint64_t* linear,
                               uint64_t* exhaustive) {
  return Guard([&] {
    if (d == nullptr) return Fail(SG_ERR_INVALID_ARGUMENT, "null descriptor");
    if (linear != nullptr) *linear = Expand(d->d).size();
    if (exhaustive != nullptr) *exhaustive = CountExhaustive(d->d);
    return SG_OK;
  });
}

sg_status sg_expand(const sg_descriptor* d, sg_format format, char** out) {
  return Guard([&] {
    if (d == nullptr || out == nullptr) {
      return Fail(SG_ERR_INVALID_ARGUMENT, "null argument");
    }
    if (format == SG_FORMAT_JSON) {
      nlohmann::ordered_json j;
      const auto combos = Expand(d->d);
      j["descriptor"] = d->d.name;
      j["linear"] = combos.size();
      j["exhaustive"] = CountExhaustive(d->d);
      nlohmann::ordered_json list = nlohmann::ordered_json::array();
      for (const auto& c : combos) list.push_back(CombinationToJson(c));
      j["combinations"] = std::move(list);
      *out = Dup(j.dump(2) + "\n");
    } else if (format == SG_FORMAT_TEXT) {
      *out = Dup(ExpandText(d->d));
    } else {
      return Fail(SG_ERR_INVALID_ARGUMENT, "expand supports text or json");
    }
    return SG_OK;
  });
}

sg_status sg_campaign_size(const sg_descriptor* const* descriptors,
                           size_t n_descriptors, const char* const* tests,
                           size_t n_tests, uint64_t* out) {
  return Guard([&] {
    if (out == nullptr || (n_descriptors > 0 && descriptors == nullptr)) {
      return Fail(SG_ERR_INVALID_ARGUMENT, "null argument");
    }
    std::vector<AlgorithmDescriptor> ds;
    for (size_t i = 0; i < n_descriptors; ++i) ds.push_back(descriptors[i]->d);
    const auto names = Strings(tests, n_tests);
    for (const auto& d : ds) SelectTests(d.type, names);
    *out = CampaignSize(ds, names);
    return SG_OK;
  });
}

sg_status sg_catalog_json(sg_mode mode, char** out) {
  return Guard([&] {
    if (out == nullptr) return Fail(SG_ERR_INVALID_ARGUMENT, "null argument");
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const SmokeTestSpec& s : CatalogFor(ToMode(mode))) {
      list.push_back(
          {{"id", std::string(s.name())},
           {"feature_kind", std::string(FeatureKindName(s.feature_kind))},
           {"label_strategy", std::string(LabelStrategyName(s.label_strategy))},
           {"distinct_test", s.test_partition == TestPartitionRule::kDistinct},
           {"description", std::string(s.description)}});
    }
    *out = Dup(list.dump(2) + "\n");
    return SG_OK;
  });
}

void sg_data_options_init(sg_data_options* o) {
  if (o == nullptr) return;
  o->seed = kDefaultSeed;
  o->n = kDefaultInstances;
  o->m = kDefaultFeatures;
}

sg_status sg_generate_data(const sg_data_options* options, sg_mode mode,
                           const char* const* tests, size_t n_tests,
                           const char* out_dir, char** listing) {
  return Guard([&] {
    if (out_dir == nullptr) return Fail(SG_ERR_INVALID_ARGUMENT, "null out_dir");
    const auto emitted = GenerateCatalogData(
        ToMode(mode), Strings(tests, n_tests), ToDataConfig(options), out_dir);
    if (listing != nullptr) {
      nlohmann::ordered_json j = nlohmann::ordered_json::array();
      for (const EmittedDataset& e : emitted) {
        j.push_back(e.manifest_path.generic_string());
      }
      *listing = Dup(j.dump(2) + "\n");
    }
    return SG_OK;
  });
}

sg_status sg_emit_suite(const sg_descriptor* d, const char* template_path,
                        const char* const* tests, size_t n_tests,
                        const sg_data_options* options, const char* data_dir,
                        const char* out_path, size_t* stanzas) {
  return Guard([&] {
    if (d == nullptr || template_path == nullptr || data_dir == nullptr ||
        out_path == nullptr) {
      return Fail(SG_ERR_INVALID_ARGUMENT, "null argument");
    }
    const std::string body = ReadFile(template_path);
    const SuiteResult r =
        EmitTestSuite(d->d, Strings(tests, n_tests), body,
                      ToDataConfig(options), data_dir, out_path);
    if (stanzas != nullptr) *stanzas = r.stanzas;
    return SG_OK;
  });
}

void sg_run_options_init(sg_run_options* o) {
  if (o == nullptr) return;
  *o = sg_run_options{};
  sg_data_options_init(&o->data);
  o->timeout_ms = kDefaultTimeout.count();
  o->parallelism = 1;
  o->work_dir = "smokegen-data";
}

sg_status sg_run(const sg_descriptor* const* descriptors, size_t n_descriptors,
                 const sg_run_options* options, const char* report_path,
                 sg_run_result* result) {
  return Guard([&] {
    if (options == nullptr || report_path == nullptr ||
        (n_descriptors > 0 && descriptors == nullptr)) {
      return Fail(SG_ERR_INVALID_ARGUMENT, "null argument");
    }
    if (options->timeout_ms <= 0) {
      return Fail(SG_ERR_INVALID_ARGUMENT, "timeout must be positive");
    }
    RunConfig config;
    config.data = ToDataConfig(&options->data);
    config.timeout = std::chrono::milliseconds(options->timeout_ms);
    config.parallelism = options->parallelism;
    config.tests = Strings(options->tests, options->n_tests);
    for (size_t i = 0; i < options->n_overrides; ++i) {
      if (options->override_timeout_ms[i] <= 0) {
        return Fail(SG_ERR_INVALID_ARGUMENT, "timeout must be positive");
      }
      config.timeout_overrides[options->override_tests[i]] =
          std::chrono::milliseconds(options->override_timeout_ms[i]);
    }
    config.adapter_command =
        Strings(options->adapter_argv, options->adapter_argc);
    if (config.adapter_command.empty()) {
      return Fail(SG_ERR_INVALID_ARGUMENT, "no adapter command");
    }
    config.work_dir = options->work_dir != nullptr ? options->work_dir : ".";
    if (options->memory_limit_mb > 0) {
      config.memory_limit_mb = options->memory_limit_mb;
    }
    if (options->adapter_log != nullptr) config.adapter_log = options->adapter_log;

    std::vector<AlgorithmDescriptor> ds;
    for (size_t i = 0; i < n_descriptors; ++i) ds.push_back(descriptors[i]->d);
    const Report report = RunSuite(ds, config);
    WriteReport(report, report_path);
    FillResult(Summarize(report), result);
    return SG_OK;
  });
}

sg_status sg_report_render(const char* report_path, sg_format format,
                           char** out, sg_run_result* result) {
  return Guard([&] {
    if (report_path == nullptr) {
      return Fail(SG_ERR_INVALID_ARGUMENT, "null report path");
    }
    const Report report = ReadReport(report_path);
    const Summary s = Summarize(report);
    FillResult(s, result);
    if (out == nullptr) return SG_OK;
    switch (format) {
      case SG_FORMAT_MARKDOWN:
      case SG_FORMAT_TEXT:
        *out = Dup(SummaryMarkdown(s));
        break;
      case SG_FORMAT_CSV:
        *out = Dup(SummaryCsv(s));
        break;
      case SG_FORMAT_JSON:
        *out = Dup(ReportToJson(report)["summary"].dump(2) + "\n");
        break;
    }
    return SG_OK;
  });
}

sg_status sg_mock_adapter_serve(const char* const* rules, size_t n_rules) {
  return Guard([&] {
    std::vector<MockRule> parsed;
    for (const std::string& r : Strings(rules, n_rules)) {
      parsed.push_back(ParseMockRule(r));
    }
    std::ios::sync_with_stdio(false);
    ServeMockAdapter(std::cin, std::cout, parsed);
    return SG_OK;
  });
}

}  // extern "C"
