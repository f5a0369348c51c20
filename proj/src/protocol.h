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

// Adapter wire protocol: newline-delimited JSON on the adapter's stdin and
// stdout, exactly one response line per request line.
//
//   -> {"v":1,"id":0,"command":"capabilities"}
//   <- {"v":1,"id":0,"status":"ok","feature_types":["double","categorical"],
//       "modes":["classification","clustering"]}
//
//   -> {"v":1,"id":7,"command":"run_test","mode":"classification",
//       "smoketest":"UNIFORM","target":{"package":"...","class":"..."},
//       "params":{"M":1,"A":false},
//       "train":{"csv":"/abs/UNIFORM.csv","arff":"...","manifest":"..."},
//       "test":{...},"memory_limit_mb":null}
//   <- {"v":1,"id":7,"status":"ok"}
//   <- {"v":1,"id":7,"status":"error","error_type":"ValueError",
//       "message":"...","details":"traceback..."}
//
// Datasets travel as file paths so values stay bit-exact. `test` is present
// for classification only. Flags are sent as booleans.

#ifndef SMOKEGEN_SRC_PROTOCOL_H_
#define SMOKEGEN_SRC_PROTOCOL_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "src/catalog.h"
#include "src/datagen.h"

namespace smokegen {

inline constexpr int kProtocolVersion = 1;

struct DataRef {
  std::string csv;
  std::string arff;
  std::string manifest;
};

struct RunTestRequest {
  std::uint64_t id = 0;
  Mode mode = Mode::kClassification;
  std::string smoketest;
  std::string package;
  std::string class_name;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  DataRef train;
  std::optional<DataRef> test;
  std::optional<int> memory_limit_mb;
};

struct AdapterRequest {
  enum class Command { kCapabilities, kRunTest };
  Command command = Command::kCapabilities;
  std::uint64_t id = 0;
  RunTestRequest run;  // valid for kRunTest
};

struct AdapterResponse {
  enum class Status { kOk, kError };
  std::uint64_t id = 0;
  Status status = Status::kOk;
  std::string error_type;
  std::string message;
  std::string details;
  nlohmann::json body;  // the whole decoded line
};

struct Capabilities {
  std::vector<FeatureKind> feature_types;
  std::vector<Mode> modes;
};

// Single lines, no trailing newline.
std::string EncodeCapabilitiesRequest(std::uint64_t id);
std::string EncodeRunTest(const RunTestRequest& r);
std::string EncodeOk(std::uint64_t id);
std::string EncodeError(std::uint64_t id, std::string_view error_type,
                        std::string_view message, std::string_view details = {});
std::string EncodeCapabilities(std::uint64_t id, const Capabilities& caps);

// nullopt with `why` set if the line is not a valid request.
std::optional<AdapterRequest> DecodeRequest(std::string_view line,
                                            std::string* why);
// nullopt with `why` set if the line is not a valid response.
std::optional<AdapterResponse> DecodeResponse(std::string_view line,
                                              std::string* why);
std::optional<Capabilities> DecodeCapabilities(const AdapterResponse& r,
                                               std::string* why);

}  // namespace smokegen

#endif  // SMOKEGEN_SRC_PROTOCOL_H_
