// Copyright 2026 The randomnode Authors.
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

#ifndef RANDOMNODE_RNG_H_
#define RANDOMNODE_RNG_H_

#include <cstdint>
#include <random>
#include <string_view>

namespace randomnode {

using Rng = std::mt19937_64;

// splitmix64 finalizer.
constexpr std::uint64_t Mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t CombineSeed(std::uint64_t seed, std::uint64_t value) {
  return Mix64(seed ^ Mix64(value));
}

// FNV-1a, used to fold strings into seeds and checksums.
constexpr std::uint64_t Fnv1a(std::string_view bytes,
                              std::uint64_t hash = 0xcbf29ce484222325ULL) {
  for (char c : bytes) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

// Independent generator for stream `stream` of `seed`. Streams with distinct
// indices never share state, so work split across threads by stream index
// is reproducible regardless of scheduling.
inline Rng MakeStream(std::uint64_t seed, std::uint64_t stream) {
  return Rng(CombineSeed(seed, stream));
}

}  // namespace randomnode

#endif  // RANDOMNODE_RNG_H_
