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

#include "src/runner.h"

#include <algorithm>
#include <atomic>
#include <map>
#include <memory>
#include <regex>
#include <thread>
#include <tuple>

#include "src/combinatorics.h"
#include "src/error.h"
#include "src/subprocess.h"

namespace smokegen {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

constexpr std::string_view kRegexPrefix = "re:";
constexpr std::chrono::milliseconds kExitGrace{500};

struct Job {
  std::size_t descriptor = 0;
  SmokeTestSpec spec;
  ParameterCombination combination;
  const EmittedDataset* data = nullptr;
  std::optional<std::string> skip_reason;
};

DataRef MakeRef(const fs::path& dir, const PartitionFiles& files,
                const fs::path& manifest) {
  return {fs::absolute(dir / files.csv).lexically_normal().string(),
          fs::absolute(dir / files.arff).lexically_normal().string(),
          fs::absolute(manifest).lexically_normal().string()};
}

RunTestRequest MakeRequest(std::uint64_t id, const AlgorithmDescriptor& d,
                           const Job& job, const RunConfig& config) {
  RunTestRequest r;
  r.id = id;
  r.mode = d.type;
  r.smoketest = std::string(job.spec.name());
  r.package = d.package;
  r.class_name = d.class_name;
  for (const auto& [k, v] : job.combination.assignment) {
    r.params[k] = ValueToJson(v);
  }
  const EmittedDataset& ds = *job.data;
  r.train = MakeRef(ds.dir(), ds.manifest.train, ds.manifest_path);
  if (d.type == Mode::kClassification && ds.manifest.test) {
    r.test = MakeRef(ds.dir(), *ds.manifest.test, ds.manifest_path);
  }
  r.memory_limit_mb = config.memory_limit_mb;
  return r;
}

// Sends one request and waits for its terminal event.
AdapterEvent Exchange(LineProcess& proc, const std::string& request,
                      std::uint64_t id, std::chrono::milliseconds timeout) {
  AdapterEvent ev;
  if (!proc.WriteLine(request)) {
    ev.kind = AdapterEvent::Kind::kProcessExit;
    ev.detail = "adapter closed its input";
    if (auto how = proc.DescribeExit(kExitGrace); !how.empty()) {
      ev.detail += " (" + how + ")";
    }
    return ev;
  }
  std::string line;
  switch (proc.ReadLine(timeout, &line)) {
    case LineProcess::ReadStatus::kTimeout:
      ev.kind = AdapterEvent::Kind::kTimeout;
      ev.detail = "no response within " + std::to_string(timeout.count()) +
                  " ms";
      return ev;
    case LineProcess::ReadStatus::kClosed: {
      ev.kind = AdapterEvent::Kind::kProcessExit;
      ev.detail = "adapter exited without responding";
      if (auto how = proc.DescribeExit(kExitGrace); !how.empty()) {
        ev.detail += " (" + how + ")";
      }
      return ev;
    }
    case LineProcess::ReadStatus::kLine:
      break;
  }
  std::string why;
  auto resp = DecodeResponse(line, &why);
  if (!resp) {
    ev.kind = AdapterEvent::Kind::kMalformed;
    ev.detail = why;
    return ev;
  }
  if (resp->id != id) {
    ev.kind = AdapterEvent::Kind::kMalformed;
    ev.detail = "response id " + std::to_string(resp->id) +
                " does not match request id " + std::to_string(id);
    return ev;
  }
  ev.kind = AdapterEvent::Kind::kResponse;
  ev.response = std::move(resp);
  return ev;
}

Capabilities Handshake(LineProcess& proc, const RunConfig& config) {
  const AdapterEvent ev = Exchange(proc, EncodeCapabilitiesRequest(0), 0,
                                   config.handshake_timeout);
  if (ev.kind != AdapterEvent::Kind::kResponse) {
    throw CampaignError("adapter failed the capabilities handshake: " +
                        ev.detail);
  }
  std::string why;
  auto caps = DecodeCapabilities(*ev.response, &why);
  if (!caps) throw CampaignError("adapter capabilities: " + why);
  return *caps;
}

}  // namespace

std::chrono::milliseconds RunConfig::TimeoutFor(
    std::string_view smoketest) const {
  if (auto it = timeout_overrides.find(std::string(smoketest));
      it != timeout_overrides.end()) {
    return it->second;
  }
  return timeout;
}

bool MatchesAcceptedError(std::string_view text,
                          std::span<const std::string> patterns) {
  for (const std::string& p : patterns) {
    if (p.starts_with(kRegexPrefix)) {
      try {
        const std::regex re(p.substr(kRegexPrefix.size()),
                            std::regex::ECMAScript);
        if (std::regex_search(text.begin(), text.end(), re)) return true;
      } catch (const std::regex_error&) {
        // Rejected at descriptor parse time; treat as no match here.
      }
    } else if (!p.empty() && text.find(p) != std::string_view::npos) {
      return true;
    }
  }
  return false;
}

Outcome ClassifyResponse(const AdapterEvent& event,
                         std::span<const std::string> accepted_errors,
                         std::string* message) {
  std::string msg;
  Outcome outcome = Outcome::kFailAdapter;
  switch (event.kind) {
    case AdapterEvent::Kind::kTimeout:
      outcome = Outcome::kFailTimeout;
      msg = event.detail;
      break;
    case AdapterEvent::Kind::kProcessExit:
    case AdapterEvent::Kind::kMalformed:
      outcome = Outcome::kFailAdapter;
      msg = event.detail;
      break;
    case AdapterEvent::Kind::kResponse: {
      if (!event.response) {
        msg = "missing response";
        break;
      }
      const AdapterResponse& r = *event.response;
      if (r.status == AdapterResponse::Status::kOk) {
        outcome = Outcome::kPass;
        break;
      }
      msg = r.error_type.empty() ? r.message : r.error_type + ": " + r.message;
      outcome = MatchesAcceptedError(msg, accepted_errors)
                    ? Outcome::kExpectedError
                    : Outcome::kFailCrash;
      break;
    }
  }
  if (message != nullptr) *message = std::move(msg);
  return outcome;
}

nlohmann::ordered_json ConfigToJson(const RunConfig& config) {
  nlohmann::ordered_json j;
  j["seed"] = config.data.seed;
  j["n"] = config.data.n;
  j["m"] = config.data.m;
  j["timeout_ms"] = config.timeout.count();
  nlohmann::ordered_json overrides = nlohmann::ordered_json::object();
  for (const auto& [k, v] : config.timeout_overrides) overrides[k] = v.count();
  j["timeout_overrides_ms"] = std::move(overrides);
  j["parallelism"] = config.parallelism;
  j["tests"] = config.tests;
  j["adapter_command"] = config.adapter_command;
  j["memory_limit_mb"] = config.memory_limit_mb
                             ? nlohmann::ordered_json(*config.memory_limit_mb)
                             : nlohmann::ordered_json(nullptr);
  return j;
}

Report RunSuite(std::span<const AlgorithmDescriptor> descriptors,
                const RunConfig& config) {
  // Datasets are shared across descriptors of the same mode.
  std::map<std::pair<Mode, SmokeTestId>, EmittedDataset> datasets;
  std::vector<Job> jobs;
  for (std::size_t di = 0; di < descriptors.size(); ++di) {
    const AlgorithmDescriptor& d = descriptors[di];
    SelectTests(d.type, config.tests);  // rejects unknown names
    const std::vector<ParameterCombination> combos = Expand(d);
    for (const SmokeTestSpec& spec : ApplicableTests(d, config.tests)) {
      auto key = std::pair(d.type, spec.id);
      auto it = datasets.find(key);
      if (it == datasets.end()) {
        it = datasets
                 .emplace(key, EmitDataset(GenerateDataset(spec,
                                                           config.data.seed,
                                                           config.data.n,
                                                           config.data.m),
                                           config.work_dir))
                 .first;
      }
      for (const ParameterCombination& c : combos) {
        jobs.push_back({di, spec, c, &it->second, std::nullopt});
      }
    }
  }

  Report report;
  report.seed = config.data.seed;
  report.config = ConfigToJson(config);
  if (jobs.empty()) return report;

  auto first = LineProcess::Spawn(config.adapter_command, config.adapter_log);
  const Capabilities caps = Handshake(*first, config);
  std::size_t runnable = 0;
  for (Job& job : jobs) {
    const AlgorithmDescriptor& d = descriptors[job.descriptor];
    if (std::find(caps.modes.begin(), caps.modes.end(), d.type) ==
        caps.modes.end()) {
      job.skip_reason = "adapter does not support " +
                        std::string(ModeName(d.type));
    } else if (std::find(caps.feature_types.begin(), caps.feature_types.end(),
                         job.spec.feature_kind) == caps.feature_types.end()) {
      job.skip_reason = "adapter does not accept " +
                        std::string(FeatureKindName(job.spec.feature_kind)) +
                        " features";
    } else {
      ++runnable;
    }
  }

  std::vector<TestRecord> records(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&](std::unique_ptr<LineProcess> proc) {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      const Job& job = jobs[i];
      const AlgorithmDescriptor& d = descriptors[job.descriptor];
      TestRecord& rec = records[i];
      rec.descriptor = d.name;
      rec.smoketest = std::string(job.spec.name());
      rec.combination_index = job.combination.index;
      rec.varied = job.combination.varied.value_or("");
      if (job.skip_reason) {
        rec.outcome = Outcome::kSkipped;
        rec.message = *job.skip_reason;
        continue;
      }
      if (!proc) {
        try {
          proc = LineProcess::Spawn(config.adapter_command, config.adapter_log);
        } catch (const CampaignError& e) {
          rec.outcome = Outcome::kFailAdapter;
          rec.message = std::string("adapter restart failed: ") + e.what();
          continue;
        }
      }
      const std::uint64_t id = i + 1;
      const std::string request = EncodeRunTest(MakeRequest(id, d, job, config));
      const auto start = Clock::now();
      const AdapterEvent ev =
          Exchange(*proc, request, id, config.TimeoutFor(rec.smoketest));
      rec.duration_s =
          std::chrono::duration<double>(Clock::now() - start).count();
      rec.outcome = ClassifyResponse(ev, d.accepted_errors, &rec.message);
      if (ev.kind != AdapterEvent::Kind::kResponse) proc.reset();
    }
  };

  const std::size_t workers =
      std::clamp<std::size_t>(config.parallelism, 1, std::max<std::size_t>(runnable, 1));
  std::vector<std::thread> threads;
  for (std::size_t w = 1; w < workers; ++w) threads.emplace_back(worker, nullptr);
  worker(std::move(first));
  for (std::thread& t : threads) t.join();

  SortRecords(records);
  report.records = std::move(records);
  return report;
}

}  // namespace smokegen
