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

#ifndef SMOKEGEN_SRC_COMBINATORICS_H_
#define SMOKEGEN_SRC_COMBINATORICS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "src/catalog.h"
#include "src/descriptor.h"

namespace smokegen {

struct ParameterCombination {
  std::size_t index = 0;
  // One entry per descriptor parameter, in declaration order.
  std::vector<std::pair<std::string, ParamValue>> assignment;
  // The parameter moved off its default; empty for the all-defaults entry.
  std::optional<std::string> varied;

  const ParamValue* Find(std::string_view name) const;
};

// All-defaults first, then for each parameter in declaration order one
// combination per candidate value that differs from the default. The result
// grows with the sum of candidate counts, never their product.
std::vector<ParameterCombination> Expand(const AlgorithmDescriptor& d);

// Product of candidate-set sizes: the size of the full grid. Throws
// ArgumentError on 64-bit overflow.
std::uint64_t CountExhaustive(const AlgorithmDescriptor& d);

// Catalog entries of the descriptor's mode whose feature kind the descriptor
// accepts, optionally filtered to `only` (names; empty means all).
std::vector<SmokeTestSpec> ApplicableTests(
    const AlgorithmDescriptor& d, std::span<const std::string> only = {});

// Sum over descriptors of applicable tests times expanded combinations.
std::uint64_t CampaignSize(std::span<const AlgorithmDescriptor> descriptors,
                           std::span<const std::string> only = {});

// JSON form of a parameter value. Flags become booleans on the wire.
nlohmann::ordered_json ValueToJson(const ParamValue& v);

// {"index": i, "varied": name|null, "assignment": {...}} with assignment keys
// in declaration order.
nlohmann::ordered_json CombinationToJson(const ParameterCombination& c);

}  // namespace smokegen

#endif  // SMOKEGEN_SRC_COMBINATORICS_H_
