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

#include "src/report.h"

#include <algorithm>
#include <cstdio>
#include <map>
#include <tuple>

#include "src/catalog.h"
#include "src/dataset_io.h"
#include "src/datagen.h"
#include "src/descriptor.h"
#include "src/error.h"

namespace smokegen {
namespace {

constexpr std::array<std::string_view, kAllOutcomes.size()> kOutcomeNames = {
    "PASS",         "EXPECTED_ERROR", "FAIL_CRASH",
    "FAIL_TIMEOUT", "FAIL_ADAPTER",   "SKIPPED"};

std::size_t CatalogPosition(std::string_view id) {
  auto parsed = ParseSmokeTestId(id);
  return parsed ? static_cast<std::size_t>(*parsed) : kNumClassificationTests;
}

std::string Seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", s);
  return buf;
}

}  // namespace

std::string_view OutcomeName(Outcome o) {
  return kOutcomeNames[static_cast<std::size_t>(o)];
}

std::optional<Outcome> ParseOutcome(std::string_view name) {
  for (std::size_t i = 0; i < kOutcomeNames.size(); ++i) {
    if (kOutcomeNames[i] == name) return kAllOutcomes[i];
  }
  return std::nullopt;
}

std::size_t Summary::Failures() const {
  return Count(Outcome::kFailCrash) + Count(Outcome::kFailTimeout) +
         Count(Outcome::kFailAdapter);
}

void SortRecords(std::vector<TestRecord>& records) {
  std::stable_sort(records.begin(), records.end(),
                   [](const TestRecord& a, const TestRecord& b) {
                     return std::tuple(a.descriptor,
                                       CatalogPosition(a.smoketest),
                                       a.smoketest, a.combination_index) <
                            std::tuple(b.descriptor,
                                       CatalogPosition(b.smoketest),
                                       b.smoketest, b.combination_index);
                   });
}

Summary Summarize(const Report& report) {
  Summary s;
  s.total = report.records.size();
  std::map<std::string, std::vector<double>> durations;
  std::map<std::string, std::array<std::size_t, kAllOutcomes.size()>> per_test;
  for (const TestRecord& r : report.records) {
    ++s.counts[static_cast<std::size_t>(r.outcome)];
    durations[r.smoketest].push_back(r.duration_s);
    ++per_test[r.smoketest][static_cast<std::size_t>(r.outcome)];
  }
  for (const auto& [id, values] : durations) {
    DurationStats d;
    d.smoketest = id;
    d.count = values.size();
    d.p50 = EmpiricalQuantile(values, 0.5);
    d.p90 = EmpiricalQuantile(values, 0.9);
    d.max = *std::max_element(values.begin(), values.end());
    s.durations.push_back(std::move(d));
    s.per_test_counts.push_back(per_test[id]);
  }
  return s;
}

nlohmann::ordered_json ReportToJson(const Report& report) {
  using ojson = nlohmann::ordered_json;
  ojson j;
  j["tool"] = "smokegen";
  j["tool_version"] = report.tool_version;
  j["seed"] = report.seed;
  j["config"] = report.config;
  ojson records = ojson::array();
  for (const TestRecord& r : report.records) {
    ojson rec;
    rec["descriptor"] = r.descriptor;
    rec["smoketest"] = r.smoketest;
    rec["combination_index"] = r.combination_index;
    rec["varied"] = r.varied.empty() ? ojson(nullptr) : ojson(r.varied);
    rec["outcome"] = std::string(OutcomeName(r.outcome));
    rec["duration_s"] = r.duration_s;
    rec["message"] = r.message;
    records.push_back(std::move(rec));
  }
  j["records"] = std::move(records);

  const Summary s = Summarize(report);
  ojson counts;
  for (Outcome o : kAllOutcomes) {
    counts[std::string(OutcomeName(o))] = s.Count(o);
  }
  ojson durations = ojson::array();
  for (const DurationStats& d : s.durations) {
    durations.push_back({{"smoketest", d.smoketest},
                         {"count", d.count},
                         {"p50_s", d.p50},
                         {"p90_s", d.p90},
                         {"max_s", d.max}});
  }
  j["summary"] = {{"total", s.total},
                  {"counts", std::move(counts)},
                  {"durations", std::move(durations)}};
  return j;
}

Report ReportFromJson(const nlohmann::json& j) {
  try {
    Report r;
    r.tool_version = j.at("tool_version").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("config")) {
      r.config = nlohmann::ordered_json::parse(j.at("config").dump());
    }
    for (const auto& rec : j.at("records")) {
      TestRecord t;
      t.descriptor = rec.at("descriptor").get<std::string>();
      t.smoketest = rec.at("smoketest").get<std::string>();
      t.combination_index = rec.at("combination_index").get<std::size_t>();
      if (rec.contains("varied") && rec["varied"].is_string()) {
        t.varied = rec["varied"].get<std::string>();
      }
      auto outcome = ParseOutcome(rec.at("outcome").get<std::string>());
      if (!outcome) throw ArgumentError("report has an unknown outcome");
      t.outcome = *outcome;
      t.duration_s = rec.at("duration_s").get<double>();
      t.message = rec.value("message", std::string());
      r.records.push_back(std::move(t));
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("malformed report: ") + e.what());
  }
}

Report ReadReport(const std::filesystem::path& path) {
  nlohmann::json j = nlohmann::json::parse(ReadFile(path), nullptr, false);
  if (j.is_discarded()) throw IoError(path.string(), "report is not valid JSON");
  return ReportFromJson(j);
}

void WriteReport(const Report& report, const std::filesystem::path& path) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) throw IoError(path.parent_path().string(), ec.message());
  }
  WriteFile(path, ReportToJson(report).dump(2) + "\n");
}

std::string SummaryMarkdown(const Summary& s) {
  std::string out = "## Outcomes\n\n| Outcome | Count |\n|---|---:|\n";
  for (Outcome o : kAllOutcomes) {
    out += "| " + std::string(OutcomeName(o)) + " | " +
           std::to_string(s.Count(o)) + " |\n";
  }
  out += "| **Total** | " + std::to_string(s.total) + " |\n\n";
  out += "## Durations\n\n| Smoke test | Runs | p50 (s) | p90 (s) | max (s) |\n"
         "|---|---:|---:|---:|---:|\n";
  for (const DurationStats& d : s.durations) {
    out += "| " + d.smoketest + " | " + std::to_string(d.count) + " | " +
           Seconds(d.p50) + " | " + Seconds(d.p90) + " | " + Seconds(d.max) +
           " |\n";
  }
  return out;
}

std::string SummaryCsv(const Summary& s) {
  std::string out = "smoketest,count";
  for (Outcome o : kAllOutcomes) out += "," + std::string(OutcomeName(o));
  out += ",p50_s,p90_s,max_s\n";
  for (std::size_t i = 0; i < s.durations.size(); ++i) {
    const DurationStats& d = s.durations[i];
    out += d.smoketest + "," + std::to_string(d.count);
    for (std::size_t c : s.per_test_counts[i]) out += "," + std::to_string(c);
    out += "," + FormatDouble(d.p50) + "," + FormatDouble(d.p90) + "," +
           FormatDouble(d.max) + "\n";
  }
  out += "TOTAL," + std::to_string(s.total);
  for (Outcome o : kAllOutcomes) out += "," + std::to_string(s.Count(o));
  out += ",,,\n";
  return out;
}

}  // namespace smokegen
