// Copyright 2026 The Taxopairs Authors.
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

#ifndef TAXOPAIRS_RANDOM_H_
#define TAXOPAIRS_RANDOM_H_

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <utility>

namespace taxopairs {

// Hashing and seeded randomness. Nothing here uses the standard
// distributions, whose output differs between library vendors.

uint64_t SplitMix64(uint64_t x);

uint64_t Fnv1a64(std::string_view bytes,
                 uint64_t basis = 0xcbf29ce484222325ULL);

// Independent sub-stream seed for a named purpose.
uint64_t DeriveSeed(uint64_t seed, std::string_view purpose);

// Counter-based draw: the value for (seed, index) does not depend on how
// many other indices were evaluated or in which order.
inline uint64_t HashAt(uint64_t seed, uint64_t index) {
  return SplitMix64(seed ^ SplitMix64(index + 0x632be59bd9b4e019ULL));
}

// Maps a 64-bit hash onto [0, n) by multiply-shift.
inline uint64_t ScaleToRange(uint64_t hash, uint64_t n) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(hash) * n) >> 64);
}

class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t Next() { return engine_(); }

  // Exactly uniform in [0, n); n must be positive.
  uint64_t Uniform(uint64_t n);

  bool Coin() { return (engine_() >> 63) != 0; }

  // Fisher-Yates.
  template <typename T>
  void Shuffle(std::span<T> items) {
    for (size_t i = items.size(); i > 1; --i) {
      size_t j = Uniform(i);
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace taxopairs

#endif  // TAXOPAIRS_RANDOM_H_
