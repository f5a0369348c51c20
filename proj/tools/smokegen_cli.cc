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

// smokegen command-line tool. Talks to the library only through the C API.
//
// Exit codes: 0 success, 1 the campaign recorded failures, 2 usage or
// configuration error.

#include <wordexp.h>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "smokegen/smokegen.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailures = 1;
constexpr int kExitUsage = 2;

struct Free {
  void operator()(char* s) const { sg_string_free(s); }
};
using OwnedString = std::unique_ptr<char, Free>;

struct DescriptorDeleter {
  void operator()(sg_descriptor* d) const { sg_descriptor_free(d); }
};
using Descriptor = std::unique_ptr<sg_descriptor, DescriptorDeleter>;

// Thrown after an error was already reported.
struct Abort {
  int code;
};

void Check(sg_status status, const std::string& context) {
  if (status == SG_OK) return;
  const std::string message = sg_last_error();
  // Load errors already lead with the path.
  if (message.starts_with(context + ":")) {
    std::cerr << "smokegen: " << message << "\n";
  } else {
    std::cerr << "smokegen: " << context << ": " << message << "\n";
  }
  throw Abort{kExitUsage};
}

std::vector<const char*> CStrings(const std::vector<std::string>& v) {
  std::vector<const char*> out;
  out.reserve(v.size());
  for (const auto& s : v) out.push_back(s.c_str());
  return out;
}

std::vector<Descriptor> LoadAll(const std::vector<std::string>& paths) {
  std::vector<Descriptor> out;
  for (const std::string& p : paths) {
    sg_descriptor* d = nullptr;
    Check(sg_descriptor_load(p.c_str(), &d), p);
    out.emplace_back(d);
  }
  return out;
}

std::vector<const sg_descriptor*> Raw(const std::vector<Descriptor>& ds) {
  std::vector<const sg_descriptor*> out;
  for (const auto& d : ds) out.push_back(d.get());
  return out;
}

sg_mode ParseModeFlag(const std::string& s) {
  return s == "clustering" ? SG_MODE_CLUSTERING : SG_MODE_CLASSIFICATION;
}

// Splits an adapter command line with shell word rules, no substitution.
std::vector<std::string> SplitCommand(const std::string& command) {
  wordexp_t w;
  if (wordexp(command.c_str(), &w, WRDE_NOCMD | WRDE_UNDEF) != 0) {
    std::cerr << "smokegen: cannot parse adapter command '" << command << "'\n";
    throw Abort{kExitUsage};
  }
  std::vector<std::string> out(w.we_wordv, w.we_wordv + w.we_wordc);
  wordfree(&w);
  return out;
}

std::string SelfPath() {
  std::error_code ec;
  auto p = std::filesystem::read_symlink("/proc/self/exe", ec);
  if (ec) {
    std::cerr << "smokegen: cannot locate own executable\n";
    throw Abort{kExitUsage};
  }
  return p.string();
}

int64_t ToMillis(double seconds) {
  return static_cast<int64_t>(std::llround(seconds * 1000.0));
}

void PrintCounts(const sg_run_result& r) {
  static const char* kNames[SG_OUTCOME_COUNT] = {
      "PASS", "EXPECTED_ERROR", "FAIL_CRASH",
      "FAIL_TIMEOUT", "FAIL_ADAPTER", "SKIPPED"};
  std::cout << "total " << r.total;
  for (int i = 0; i < SG_OUTCOME_COUNT; ++i) {
    std::cout << "  " << kNames[i] << " " << r.counts[i];
  }
  std::cout << "\n";
}

struct DataFlags {
  uint64_t seed = 0;
  size_t n = 0;
  size_t m = 0;
};

void AddDataFlags(CLI::App* cmd, DataFlags* f) {
  sg_data_options defaults;
  sg_data_options_init(&defaults);
  f->seed = defaults.seed;
  f->n = defaults.n;
  f->m = defaults.m;
  cmd->add_option("--seed", f->seed, "Random seed")
      ->envname("SMOKEGEN_SEED")
      ->capture_default_str();
  cmd->add_option("-n,--instances", f->n, "Instances per partition")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("-m,--features", f->m, "Features per instance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

sg_data_options ToOptions(const DataFlags& f) {
  sg_data_options o;
  sg_data_options_init(&o);
  o.seed = f.seed;
  o.n = f.n;
  o.m = f.m;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorial smoke tests for machine-learning libraries"};
  app.set_version_flag("--version", std::string(sg_version()));
  app.require_subcommand(1);

  std::vector<std::string> tests;
  auto add_tests = [&](CLI::App* cmd) {
    cmd->add_option("--tests", tests, "Smoke tests to include (default: all)")
        ->delimiter(',');
  };

  // generate-data
  auto* gen = app.add_subcommand("generate-data", "Write catalog datasets");
  DataFlags gen_data;
  std::string gen_out = "smokegen-data";
  std::string gen_mode = "classification";
  AddDataFlags(gen, &gen_data);
  add_tests(gen);
  gen->add_option("-o,--out", gen_out, "Output directory")->capture_default_str();
  gen->add_option("--mode", gen_mode, "Catalog to generate")
      ->check(CLI::IsMember({"classification", "clustering"}))
      ->capture_default_str();

  // expand
  auto* expand = app.add_subcommand("expand", "List hyperparameter combinations");
  std::vector<std::string> expand_paths;
  bool expand_json = false;
  expand->add_option("descriptors", expand_paths, "Descriptor files")
      ->required()
      ->check(CLI::ExistingFile);
  expand->add_flag("--json", expand_json, "Emit JSON");

  // emit
  auto* emit = app.add_subcommand("emit", "Render a test suite from a template");
  std::string emit_path, emit_template, emit_out, emit_data = "smokegen-data";
  DataFlags emit_flags;
  emit->add_option("descriptor", emit_path, "Descriptor file")
      ->required()
      ->check(CLI::ExistingFile);
  emit->add_option("-t,--template", emit_template, "Template file")
      ->required()
      ->check(CLI::ExistingFile);
  emit->add_option("-o,--out", emit_out, "Rendered suite path")->required();
  emit->add_option("--data-dir", emit_data, "Dataset directory")
      ->capture_default_str();
  AddDataFlags(emit, &emit_flags);
  add_tests(emit);

  // run
  auto* run = app.add_subcommand("run", "Execute a campaign through an adapter");
  std::vector<std::string> run_paths;
  std::string run_adapter, run_report = "smokegen-report.json";
  std::string run_work = "smokegen-data", run_log;
  std::vector<std::string> run_mock_rules;
  std::vector<std::string> run_overrides;
  double run_timeout = 60;
  size_t run_parallelism = 1;
  int run_memory = 0;
  DataFlags run_data;
  run->add_option("descriptors", run_paths, "Descriptor files")
      ->required()
      ->check(CLI::ExistingFile);
  auto* adapter_opt =
      run->add_option("--adapter", run_adapter, "Adapter command line");
  auto* mock_opt = run->add_option("--mock-adapter", run_mock_rules,
                                   "Use the built-in mock adapter with rules");
  adapter_opt->excludes(mock_opt);
  run->add_option("-r,--report", run_report, "Report path")->capture_default_str();
  run->add_option("--timeout", run_timeout, "Per-test timeout in seconds")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  run->add_option("--timeout-for", run_overrides,
                  "Per-test timeout override, TEST=SECONDS")
      ->delimiter(',');
  run->add_option("-j,--parallelism", run_parallelism, "Adapter processes")
      ->envname("SMOKEGEN_PARALLELISM")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  run->add_option("--work-dir", run_work, "Dataset directory")
      ->capture_default_str();
  run->add_option("--memory-limit-mb", run_memory,
                  "Advisory memory limit passed to the adapter");
  run->add_option("--adapter-log", run_log, "File receiving adapter stderr");
  AddDataFlags(run, &run_data);
  add_tests(run);

  // report
  auto* report = app.add_subcommand("report", "Summarize an existing report");
  std::string report_path, report_format = "markdown";
  report->add_option("report", report_path, "Report JSON")
      ->required()
      ->check(CLI::ExistingFile);
  report->add_option("-f,--format", report_format, "Summary format")
      ->check(CLI::IsMember({"markdown", "csv", "json"}))
      ->capture_default_str();

  // catalog
  auto* catalog = app.add_subcommand("catalog", "Print the smoke-test catalog");
  std::string catalog_mode = "classification";
  catalog->add_option("--mode", catalog_mode, "Catalog")
      ->check(CLI::IsMember({"classification", "clustering"}))
      ->capture_default_str();

  // mock-adapter
  auto* mock = app.add_subcommand("mock-adapter",
                                  "Serve the built-in mock adapter on stdio");
  std::vector<std::string> mock_rules;
  mock->add_option("--rule", mock_rules, "Mock rule");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) {
      const auto names = CStrings(tests);
      const sg_data_options o = ToOptions(gen_data);
      char* listing = nullptr;
      Check(sg_generate_data(&o, ParseModeFlag(gen_mode), names.data(),
                             names.size(), gen_out.c_str(), &listing),
            "generate-data");
      OwnedString owned(listing);
      std::cout << listing;
      return kExitOk;
    }

    if (*expand) {
      const auto ds = LoadAll(expand_paths);
      uint64_t total = 0, total_exhaustive = 0;
      std::string json = "{\n\"descriptors\": [";
      for (size_t i = 0; i < ds.size(); ++i) {
        uint64_t linear = 0, exhaustive = 0;
        Check(sg_descriptor_counts(ds[i].get(), &linear, &exhaustive),
              expand_paths[i]);
        total += linear;
        total_exhaustive += exhaustive;
        char* out = nullptr;
        Check(sg_expand(ds[i].get(),
                        expand_json ? SG_FORMAT_JSON : SG_FORMAT_TEXT, &out),
              expand_paths[i]);
        OwnedString owned(out);
        if (expand_json) {
          json += (i == 0 ? "\n" : ",\n") + std::string(out);
        } else {
          std::cout << out;
        }
      }
      if (expand_json) {
        std::cout << json << "],\n\"total\": " << total
                  << ",\n\"total_exhaustive\": " << total_exhaustive << "\n}\n";
      } else {
        std::cout << "total: " << total << " combinations (exhaustive "
                  << total_exhaustive << ")\n";
      }
      return kExitOk;
    }

    if (*emit) {
      const auto ds = LoadAll({emit_path});
      const auto names = CStrings(tests);
      const sg_data_options o = ToOptions(emit_flags);
      size_t stanzas = 0;
      Check(sg_emit_suite(ds[0].get(), emit_template.c_str(), names.data(),
                          names.size(), &o, emit_data.c_str(), emit_out.c_str(),
                          &stanzas),
            "emit");
      std::cout << emit_out << ": " << stanzas << " test stanzas\n";
      return kExitOk;
    }

    if (*run) {
      std::vector<std::string> adapter;
      if (!run_mock_rules.empty()) {
        adapter = {SelfPath(), "mock-adapter"};
        for (const auto& r : run_mock_rules) {
          adapter.push_back("--rule");
          adapter.push_back(r);
        }
      } else if (!run_adapter.empty()) {
        adapter = SplitCommand(run_adapter);
      } else {
        std::cerr << "smokegen: run needs --adapter or --mock-adapter\n";
        return kExitUsage;
      }
      const auto ds = LoadAll(run_paths);
      const auto raw = Raw(ds);
      const auto names = CStrings(tests);
      const auto argv_c = CStrings(adapter);
      std::vector<std::string> override_names;
      std::vector<int64_t> override_ms;
      for (const std::string& o : run_overrides) {
        const auto eq = o.find('=');
        double seconds = 0;
        try {
          seconds = eq == std::string::npos ? 0 : std::stod(o.substr(eq + 1));
        } catch (const std::exception&) {
        }
        if (eq == 0 || !(seconds > 0)) {
          std::cerr << "smokegen: --timeout-for expects TEST=SECONDS, got '"
                    << o << "'\n";
          return kExitUsage;
        }
        override_names.push_back(o.substr(0, eq));
        override_ms.push_back(ToMillis(seconds));
      }
      const auto override_c = CStrings(override_names);

      sg_run_options o;
      sg_run_options_init(&o);
      o.data = ToOptions(run_data);
      o.timeout_ms = ToMillis(run_timeout);
      o.parallelism = run_parallelism;
      o.tests = names.data();
      o.n_tests = names.size();
      o.override_tests = override_c.data();
      o.override_timeout_ms = override_ms.data();
      o.n_overrides = override_ms.size();
      o.adapter_argv = argv_c.data();
      o.adapter_argc = argv_c.size();
      o.work_dir = run_work.c_str();
      o.memory_limit_mb = run_memory;
      o.adapter_log = run_log.empty() ? nullptr : run_log.c_str();

      uint64_t size = 0;
      Check(sg_campaign_size(raw.data(), raw.size(), names.data(), names.size(),
                             &size),
            "run");
      std::cerr << "smokegen: campaign of " << size << " tests\n";
      sg_run_result result{};
      Check(sg_run(raw.data(), raw.size(), &o, run_report.c_str(), &result),
            "run");
      PrintCounts(result);
      std::cout << "report: " << run_report << "\n";
      return result.failures > 0 ? kExitFailures : kExitOk;
    }

    if (*report) {
      const sg_format format = report_format == "csv"    ? SG_FORMAT_CSV
                               : report_format == "json" ? SG_FORMAT_JSON
                                                         : SG_FORMAT_MARKDOWN;
      char* out = nullptr;
      sg_run_result result{};
      Check(sg_report_render(report_path.c_str(), format, &out, &result),
            "report");
      OwnedString owned(out);
      std::cout << out;
      return kExitOk;
    }

    if (*catalog) {
      char* out = nullptr;
      Check(sg_catalog_json(ParseModeFlag(catalog_mode), &out), "catalog");
      OwnedString owned(out);
      std::cout << out;
      return kExitOk;
    }

    if (*mock) {
      const auto rules = CStrings(mock_rules);
      Check(sg_mock_adapter_serve(rules.data(), rules.size()), "mock-adapter");
      return kExitOk;
    }
  } catch (const Abort& a) {
    return a.code;
  }
  return kExitUsage;
}
