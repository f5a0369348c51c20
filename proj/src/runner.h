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

// Campaign execution against an out-of-process adapter.
//
// Every (descriptor x applicable smoke test x combination) becomes one
// run_test request. A pool of workers each owns one adapter process; an
// adapter that hangs or dies is killed and replaced before the next test, so
// one bad test never leaks into another record.

#ifndef SMOKEGEN_SRC_RUNNER_H_
#define SMOKEGEN_SRC_RUNNER_H_

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "src/descriptor.h"
#include "src/protocol.h"
#include "src/report.h"
#include "src/suite.h"

namespace smokegen {

inline constexpr std::chrono::milliseconds kDefaultTimeout{60'000};

struct RunConfig {
  DataConfig data;
  std::chrono::milliseconds timeout = kDefaultTimeout;
  // Per smoke test id, e.g. a longer budget for MANYCATS.
  std::map<std::string, std::chrono::milliseconds> timeout_overrides;
  std::size_t parallelism = 1;
  // Smoke test names to run; empty means the whole catalog.
  std::vector<std::string> tests;
  std::vector<std::string> adapter_command;
  // Where datasets are written.
  std::filesystem::path work_dir;
  // Advisory, forwarded to the adapter.
  std::optional<int> memory_limit_mb;
  std::chrono::milliseconds handshake_timeout{30'000};
  // Adapter stderr is appended here; discarded when empty.
  std::filesystem::path adapter_log;

  std::chrono::milliseconds TimeoutFor(std::string_view smoketest) const;
};

// One terminal event for a test.
struct AdapterEvent {
  enum class Kind { kResponse, kTimeout, kProcessExit, kMalformed };
  Kind kind = Kind::kResponse;
  std::optional<AdapterResponse> response;  // kResponse only
  std::string detail;
};

// Substring match, or ECMAScript regex search for patterns starting with
// "re:". Matched against "<error_type>: <message>".
bool MatchesAcceptedError(std::string_view text,
                          std::span<const std::string> patterns);

// ok -> PASS; error matching a pattern -> EXPECTED_ERROR; other error ->
// FAIL_CRASH; timeout -> FAIL_TIMEOUT; malformed line or process exit ->
// FAIL_ADAPTER. `message` receives a one-line explanation.
Outcome ClassifyResponse(const AdapterEvent& event,
                         std::span<const std::string> accepted_errors,
                         std::string* message = nullptr);

// Runs the campaign. Throws CampaignError if the adapter cannot be started
// or does not answer the capabilities handshake; individual test failures
// are recorded, never thrown.
Report RunSuite(std::span<const AlgorithmDescriptor> descriptors,
                const RunConfig& config);

// Echo of the configuration stored in the report.
nlohmann::ordered_json ConfigToJson(const RunConfig& config);

}  // namespace smokegen

#endif  // SMOKEGEN_SRC_RUNNER_H_
