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

#include "src/mock_adapter.h"

#include <unistd.h>

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <thread>

#include "src/dataset_io.h"
#include "src/descriptor.h"
#include "src/error.h"
#include "src/protocol.h"

namespace smokegen {
namespace {

double ParseSeconds(std::string_view s, std::string_view rule) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v < 0) {
    throw ArgumentError("bad number in mock rule '" + std::string(rule) + "'");
  }
  return v;
}

std::string RespondToRun(const RunTestRequest& req,
                         std::span<const MockRule> rules) {
  for (const MockRule& rule : rules) {
    switch (rule.kind) {
      case MockRule::Kind::kPass:
        return EncodeOk(req.id);
      case MockRule::Kind::kFeatures:
        break;
      case MockRule::Kind::kSleep:
        if (rule.smoketest == req.smoketest) {
          std::this_thread::sleep_for(
              std::chrono::duration<double>(rule.seconds));
          return EncodeOk(req.id);
        }
        break;
      case MockRule::Kind::kError:
        if (rule.smoketest == req.smoketest) {
          return EncodeError(req.id, rule.error_type, rule.message);
        }
        break;
      case MockRule::Kind::kExit:
        if (rule.smoketest == req.smoketest) std::_Exit(3);
        break;
      case MockRule::Kind::kFailAbove: {
        TablePartition train;
        try {
          train = ReadCsv(req.train.csv);
        } catch (const std::exception& e) {
          return EncodeError(req.id, "IOError", e.what());
        }
        for (const auto& column : train.columns) {
          for (double v : column) {
            if (v > rule.threshold) {
              return EncodeError(req.id, "OverflowError",
                                 "training value " + FormatDouble(v) +
                                     " exceeds " + FormatDouble(rule.threshold));
            }
          }
        }
        break;
      }
    }
  }
  return EncodeOk(req.id);
}

}  // namespace

MockRule ParseMockRule(std::string_view text) {
  MockRule rule;
  const std::size_t eq = text.find('=');
  const std::string_view name = text.substr(0, eq);
  const std::string_view arg =
      eq == std::string_view::npos ? std::string_view() : text.substr(eq + 1);
  auto bad = [&]() {
    return ArgumentError("malformed mock rule '" + std::string(text) + "'");
  };

  if (name == "pass" || name == "always-pass") {
    rule.kind = MockRule::Kind::kPass;
  } else if (name == "fail-above" || name == "fail-above-threshold") {
    rule.kind = MockRule::Kind::kFailAbove;
    double v = 0;
    auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), v);
    if (arg.empty() || ec != std::errc() || ptr != arg.data() + arg.size()) {
      throw bad();
    }
    rule.threshold = v;
  } else if (name == "sleep") {
    rule.kind = MockRule::Kind::kSleep;
    const std::size_t colon = arg.find(':');
    rule.smoketest = std::string(arg.substr(0, colon));
    if (colon != std::string_view::npos) {
      rule.seconds = ParseSeconds(arg.substr(colon + 1), text);
    }
    if (rule.smoketest.empty()) throw bad();
  } else if (name == "error") {
    rule.kind = MockRule::Kind::kError;
    const std::size_t c1 = arg.find(':');
    const std::size_t c2 =
        c1 == std::string_view::npos ? c1 : arg.find(':', c1 + 1);
    if (c2 == std::string_view::npos) throw bad();
    rule.smoketest = std::string(arg.substr(0, c1));
    rule.error_type = std::string(arg.substr(c1 + 1, c2 - c1 - 1));
    rule.message = std::string(arg.substr(c2 + 1));
    if (rule.smoketest.empty()) throw bad();
  } else if (name == "exit") {
    rule.kind = MockRule::Kind::kExit;
    rule.smoketest = std::string(arg);
    if (rule.smoketest.empty()) throw bad();
  } else if (name == "features") {
    rule.kind = MockRule::Kind::kFeatures;
    std::size_t start = 0;
    while (start <= arg.size()) {
      const std::size_t plus = arg.find('+', start);
      const std::string_view f = arg.substr(
          start, plus == std::string_view::npos ? arg.npos : plus - start);
      if (f == "double") {
        rule.features.push_back(FeatureKind::kNumeric);
      } else if (f == "categorical") {
        rule.features.push_back(FeatureKind::kCategorical);
      } else {
        throw bad();
      }
      if (plus == std::string_view::npos) break;
      start = plus + 1;
    }
  } else {
    throw bad();
  }
  return rule;
}

int ServeMockAdapter(std::istream& in, std::ostream& out,
                     std::span<const MockRule> rules) {
  Capabilities caps{{FeatureKind::kNumeric, FeatureKind::kCategorical},
                    {Mode::kClassification, Mode::kClustering}};
  for (const MockRule& rule : rules) {
    if (rule.kind == MockRule::Kind::kFeatures) caps.feature_types = rule.features;
  }

  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::string why;
    auto req = DecodeRequest(line, &why);
    std::string response;
    if (!req) {
      response = EncodeError(0, "protocol", why);
    } else if (req->command == AdapterRequest::Command::kCapabilities) {
      response = EncodeCapabilities(req->id, caps);
    } else {
      response = RespondToRun(req->run, rules);
    }
    out << response << '\n';
    out.flush();
  }
  return 0;
}

}  // namespace smokegen
