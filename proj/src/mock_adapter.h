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

// A self-contained adapter with scripted faults, so campaigns can be run and
// checked without any target library installed.
//
// Rules (first match wins, otherwise the test passes):
//   pass                          always ok
//   fail-above=<x>                error if any training value exceeds x
//                                 (alias: fail-above-threshold=<x>)
//   sleep=<TEST>[:<seconds>]      stall on TEST (default 3600 s)
//   error=<TEST>:<type>:<message> reply with that error on TEST
//   exit=<TEST>                   exit the process on TEST
//   features=<kind>[+<kind>]      advertise only these feature types
//                                 (double, categorical)

#ifndef SMOKEGEN_SRC_MOCK_ADAPTER_H_
#define SMOKEGEN_SRC_MOCK_ADAPTER_H_

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "src/datagen.h"

namespace smokegen {

struct MockRule {
  enum class Kind { kPass, kFailAbove, kSleep, kError, kExit, kFeatures };
  Kind kind = Kind::kPass;
  double threshold = 0;
  std::string smoketest;
  double seconds = 3600;
  std::string error_type;
  std::string message;
  std::vector<FeatureKind> features;
};

// Throws ArgumentError on an unknown or malformed rule.
MockRule ParseMockRule(std::string_view text);

// Serves requests from `in` until EOF. Returns the process exit code.
int ServeMockAdapter(std::istream& in, std::ostream& out,
                     std::span<const MockRule> rules);

}  // namespace smokegen

#endif  // SMOKEGEN_SRC_MOCK_ADAPTER_H_
