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

#include "src/protocol.h"

#include "src/descriptor.h"

namespace smokegen {
namespace {

using ojson = nlohmann::ordered_json;

ojson Header(std::uint64_t id) {
  ojson j;
  j["v"] = kProtocolVersion;
  j["id"] = id;
  return j;
}

ojson DataRefToJson(const DataRef& d) {
  return {{"csv", d.csv}, {"arff", d.arff}, {"manifest", d.manifest}};
}

DataRef DataRefFromJson(const nlohmann::json& j) {
  DataRef d;
  d.csv = j.at("csv").get<std::string>();
  if (j.contains("arff")) d.arff = j.at("arff").get<std::string>();
  if (j.contains("manifest")) d.manifest = j.at("manifest").get<std::string>();
  return d;
}

bool CheckVersion(const nlohmann::json& j, std::string* why) {
  if (!j.is_object()) {
    *why = "not a JSON object";
    return false;
  }
  if (!j.contains("v") || !j["v"].is_number_integer() ||
      j["v"].get<int>() != kProtocolVersion) {
    *why = "missing or unsupported protocol version";
    return false;
  }
  return true;
}

}  // namespace

std::string EncodeCapabilitiesRequest(std::uint64_t id) {
  ojson j = Header(id);
  j["command"] = "capabilities";
  return j.dump();
}

std::string EncodeRunTest(const RunTestRequest& r) {
  ojson j = Header(r.id);
  j["command"] = "run_test";
  j["mode"] = std::string(ModeName(r.mode));
  j["smoketest"] = r.smoketest;
  j["target"] = {{"package", r.package}, {"class", r.class_name}};
  j["params"] = r.params;
  j["train"] = DataRefToJson(r.train);
  if (r.test) j["test"] = DataRefToJson(*r.test);
  j["memory_limit_mb"] =
      r.memory_limit_mb ? ojson(*r.memory_limit_mb) : ojson(nullptr);
  return j.dump();
}

std::string EncodeOk(std::uint64_t id) {
  ojson j = Header(id);
  j["status"] = "ok";
  return j.dump();
}

std::string EncodeError(std::uint64_t id, std::string_view error_type,
                        std::string_view message, std::string_view details) {
  ojson j = Header(id);
  j["status"] = "error";
  j["error_type"] = std::string(error_type);
  j["message"] = std::string(message);
  if (!details.empty()) j["details"] = std::string(details);
  return j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

std::string EncodeCapabilities(std::uint64_t id, const Capabilities& caps) {
  ojson j = Header(id);
  j["status"] = "ok";
  ojson types = ojson::array();
  for (FeatureKind k : caps.feature_types) {
    types.push_back(std::string(DescriptorFeatureName(k)));
  }
  ojson modes = ojson::array();
  for (Mode m : caps.modes) modes.push_back(std::string(ModeName(m)));
  j["feature_types"] = std::move(types);
  j["modes"] = std::move(modes);
  return j.dump();
}

std::optional<AdapterRequest> DecodeRequest(std::string_view line,
                                            std::string* why) {
  nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
  if (j.is_discarded()) {
    *why = "request is not valid JSON";
    return std::nullopt;
  }
  if (!CheckVersion(j, why)) return std::nullopt;
  try {
    AdapterRequest req;
    req.id = j.value("id", std::uint64_t{0});
    const std::string command = j.at("command").get<std::string>();
    if (command == "capabilities") {
      req.command = AdapterRequest::Command::kCapabilities;
      return req;
    }
    if (command != "run_test") {
      *why = "unknown command '" + command + "'";
      return std::nullopt;
    }
    req.command = AdapterRequest::Command::kRunTest;
    RunTestRequest& r = req.run;
    r.id = req.id;
    auto mode = ParseMode(j.at("mode").get<std::string>());
    if (!mode) {
      *why = "unknown mode";
      return std::nullopt;
    }
    r.mode = *mode;
    r.smoketest = j.value("smoketest", std::string());
    r.package = j.at("target").at("package").get<std::string>();
    r.class_name = j.at("target").at("class").get<std::string>();
    if (j.contains("params")) {
      r.params = nlohmann::ordered_json::parse(j.at("params").dump());
    }
    r.train = DataRefFromJson(j.at("train"));
    if (j.contains("test") && !j.at("test").is_null()) {
      r.test = DataRefFromJson(j.at("test"));
    }
    if (r.mode == Mode::kClassification && !r.test) {
      *why = "classification request without test data";
      return std::nullopt;
    }
    if (j.contains("memory_limit_mb") && !j.at("memory_limit_mb").is_null()) {
      r.memory_limit_mb = j.at("memory_limit_mb").get<int>();
    }
    return req;
  } catch (const nlohmann::json::exception& e) {
    *why = std::string("malformed request: ") + e.what();
    return std::nullopt;
  }
}

std::optional<AdapterResponse> DecodeResponse(std::string_view line,
                                              std::string* why) {
  nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
  if (j.is_discarded()) {
    *why = "response is not valid JSON";
    return std::nullopt;
  }
  if (!CheckVersion(j, why)) return std::nullopt;
  try {
    AdapterResponse r;
    r.id = j.at("id").get<std::uint64_t>();
    const std::string status = j.at("status").get<std::string>();
    if (status == "ok") {
      r.status = AdapterResponse::Status::kOk;
    } else if (status == "error") {
      r.status = AdapterResponse::Status::kError;
      r.error_type = j.value("error_type", std::string());
      r.message = j.value("message", std::string());
      if (j.contains("details") && j["details"].is_string()) {
        r.details = j["details"].get<std::string>();
      }
    } else {
      *why = "unknown status '" + status + "'";
      return std::nullopt;
    }
    r.body = std::move(j);
    return r;
  } catch (const nlohmann::json::exception& e) {
    *why = std::string("malformed response: ") + e.what();
    return std::nullopt;
  }
}

std::optional<Capabilities> DecodeCapabilities(const AdapterResponse& r,
                                               std::string* why) {
  if (r.status != AdapterResponse::Status::kOk) {
    *why = "capabilities request failed: " + r.message;
    return std::nullopt;
  }
  try {
    Capabilities caps;
    for (const auto& t : r.body.at("feature_types")) {
      const auto s = t.get<std::string>();
      if (s == "double") {
        caps.feature_types.push_back(FeatureKind::kNumeric);
      } else if (s == "categorical") {
        caps.feature_types.push_back(FeatureKind::kCategorical);
      }
    }
    for (const auto& m : r.body.at("modes")) {
      if (auto mode = ParseMode(m.get<std::string>())) {
        caps.modes.push_back(*mode);
      }
    }
    return caps;
  } catch (const nlohmann::json::exception& e) {
    *why = std::string("malformed capabilities: ") + e.what();
    return std::nullopt;
  }
}

}  // namespace smokegen
