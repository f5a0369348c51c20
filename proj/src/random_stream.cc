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

#include "src/random_stream.h"

#include <cmath>
#include <numbers>

namespace smokegen {

std::uint64_t MixBits(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

RandomStream::RandomStream(std::uint64_t seed)
    : seed_(seed), engine_(MixBits(seed)) {}

RandomStream RandomStream::Derive(std::string_view label) const {
  // FNV-1a over the label, then mixed with the parent seed.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : label) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return RandomStream(MixBits(seed_ ^ MixBits(h)));
}

RandomStream RandomStream::Derive(std::uint64_t index) const {
  return RandomStream(MixBits(seed_ + MixBits(index ^ 0x5851f42d4c957f2dULL)));
}

double RandomStream::NextUnit() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RandomStream::NextNormal() {
  // Box-Muller; the second deviate is dropped so the stream position depends
  // only on the number of calls.
  double u1 = NextUnit();
  while (u1 <= 0.0) u1 = NextUnit();
  const double u2 = NextUnit();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace smokegen
