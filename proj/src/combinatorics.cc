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

#include "src/combinatorics.h"

#include <algorithm>
#include <limits>

#include "src/error.h"

namespace smokegen {

const ParamValue* ParameterCombination::Find(std::string_view name) const {
  for (const auto& [k, v] : assignment) {
    if (k == name) return &v;
  }
  return nullptr;
}

std::vector<ParameterCombination> Expand(const AlgorithmDescriptor& d) {
  ParameterCombination defaults;
  for (const ParameterSpec& p : d.parameters) {
    defaults.assignment.emplace_back(p.name, p.DefaultValue());
  }

  std::vector<ParameterCombination> out{defaults};
  for (std::size_t i = 0; i < d.parameters.size(); ++i) {
    const ParameterSpec& p = d.parameters[i];
    const ParamValue def = p.DefaultValue();
    for (const ParamValue& v : CandidateValues(p)) {
      if (SameValue(v, def)) continue;
      ParameterCombination c = defaults;
      c.index = out.size();
      c.assignment[i].second = v;
      c.varied = p.name;
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::uint64_t CountExhaustive(const AlgorithmDescriptor& d) {
  std::uint64_t total = 1;
  for (const ParameterSpec& p : d.parameters) {
    const std::uint64_t k = CandidateValues(p).size();
    if (k != 0 && total > std::numeric_limits<std::uint64_t>::max() / k) {
      throw ArgumentError("exhaustive combination count overflows 64 bits");
    }
    total *= k;
  }
  return total;
}

std::vector<SmokeTestSpec> ApplicableTests(const AlgorithmDescriptor& d,
                                           std::span<const std::string> only) {
  std::vector<SmokeTestSpec> out;
  for (const SmokeTestSpec& spec : CatalogFor(d.type)) {
    if (!d.Supports(spec.feature_kind)) continue;
    if (!only.empty() &&
        std::find(only.begin(), only.end(), spec.name()) == only.end()) {
      continue;
    }
    out.push_back(spec);
  }
  return out;
}

std::uint64_t CampaignSize(std::span<const AlgorithmDescriptor> descriptors,
                           std::span<const std::string> only) {
  std::uint64_t total = 0;
  for (const AlgorithmDescriptor& d : descriptors) {
    total += ApplicableTests(d, only).size() * Expand(d).size();
  }
  return total;
}

nlohmann::ordered_json ValueToJson(const ParamValue& v) {
  if (auto* f = std::get_if<FlagState>(&v)) return *f == FlagState::kEnabled;
  if (auto* b = std::get_if<bool>(&v)) return *b;
  if (auto* i = std::get_if<std::int64_t>(&v)) return *i;
  if (auto* x = std::get_if<double>(&v)) return *x;
  return std::get<std::string>(v);
}

nlohmann::ordered_json CombinationToJson(const ParameterCombination& c) {
  nlohmann::ordered_json assignment = nlohmann::ordered_json::object();
  for (const auto& [k, v] : c.assignment) {
    // Flags keep their descriptor spelling in audit output.
    if (std::holds_alternative<FlagState>(v)) {
      assignment[k] = FormatValue(v);
    } else {
      assignment[k] = ValueToJson(v);
    }
  }
  nlohmann::ordered_json j;
  j["index"] = c.index;
  j["varied"] = c.varied ? nlohmann::ordered_json(*c.varied)
                         : nlohmann::ordered_json(nullptr);
  j["assignment"] = std::move(assignment);
  return j;
}

}  // namespace smokegen
