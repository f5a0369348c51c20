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

#ifndef SMOKEGEN_SRC_RANDOM_STREAM_H_
#define SMOKEGEN_SRC_RANDOM_STREAM_H_

#include <cstdint>
#include <random>
#include <string_view>

namespace smokegen {

// Seeded pseudo-random stream. Streams derived with Derive() are independent
// of each other and of the parent: drawing from one never shifts another.
//
// Not thread-safe; give each thread its own stream.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }

  // Child stream keyed on (seed, label). Does not advance this stream.
  RandomStream Derive(std::string_view label) const;
  RandomStream Derive(std::uint64_t index) const;

  std::uint64_t NextU64() { return engine_(); }

  // Uniform in [0, 1) with 53 bits of resolution.
  double NextUnit();

  // Standard normal deviate.
  double NextNormal();

  // True with probability p.
  bool Bernoulli(double p) { return NextUnit() < p; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

// SplitMix64 finalizer; used for seed derivation.
std::uint64_t MixBits(std::uint64_t x);

}  // namespace smokegen

#endif  // SMOKEGEN_SRC_RANDOM_STREAM_H_
