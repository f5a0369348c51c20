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

#ifndef SMOKEGEN_SRC_REPORT_H_
#define SMOKEGEN_SRC_REPORT_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace smokegen {

inline constexpr std::string_view kToolVersion = "0.1.0";

enum class Outcome {
  kPass,
  kExpectedError,
  kFailCrash,
  kFailTimeout,
  kFailAdapter,
  kSkipped,
};

inline constexpr std::array kAllOutcomes = {
    Outcome::kPass,        Outcome::kExpectedError, Outcome::kFailCrash,
    Outcome::kFailTimeout, Outcome::kFailAdapter,   Outcome::kSkipped};

std::string_view OutcomeName(Outcome o);
std::optional<Outcome> ParseOutcome(std::string_view name);
inline bool IsFailure(Outcome o) {
  return o == Outcome::kFailCrash || o == Outcome::kFailTimeout ||
         o == Outcome::kFailAdapter;
}

struct TestRecord {
  std::string descriptor;
  std::string smoketest;
  std::size_t combination_index = 0;
  std::string varied;  // empty for the all-defaults combination
  Outcome outcome = Outcome::kPass;
  double duration_s = 0;
  std::string message;

  bool operator==(const TestRecord&) const = default;
};

struct Report {
  std::string tool_version{kToolVersion};
  std::uint64_t seed = 0;
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  std::vector<TestRecord> records;
};

struct DurationStats {
  std::string smoketest;
  std::size_t count = 0;
  double p50 = 0;
  double p90 = 0;
  double max = 0;
};

struct Summary {
  std::size_t total = 0;
  std::array<std::size_t, kAllOutcomes.size()> counts{};
  // Per smoke test, sorted by id.
  std::vector<DurationStats> durations;
  // Outcome counts per smoke test, same order as `durations`.
  std::vector<std::array<std::size_t, kAllOutcomes.size()>> per_test_counts;

  std::size_t Count(Outcome o) const {
    return counts[static_cast<std::size_t>(o)];
  }
  std::size_t Failures() const;
};

// Sorts by (descriptor, catalog position of the smoke test, combination).
void SortRecords(std::vector<TestRecord>& records);

Summary Summarize(const Report& report);

nlohmann::ordered_json ReportToJson(const Report& report);
// Throws ArgumentError on malformed input.
Report ReportFromJson(const nlohmann::json& j);
Report ReadReport(const std::filesystem::path& path);
void WriteReport(const Report& report, const std::filesystem::path& path);

std::string SummaryMarkdown(const Summary& s);
// One row per smoke test plus a TOTAL row:
// smoketest,count,PASS,...,SKIPPED,p50_s,p90_s,max_s
std::string SummaryCsv(const Summary& s);

}  // namespace smokegen

#endif  // SMOKEGEN_SRC_REPORT_H_
