// Copyright 2026 The beliefmix Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BELIEFMIX_RNG_H_
#define BELIEFMIX_RNG_H_

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>

namespace beliefmix {

uint64_t SplitMix64(uint64_t x);

// Stable 64-bit FNV-1a; used to derive per-infostate seeds.
uint64_t Fnv1a64(std::string_view bytes);

// Mixes a base seed with stream coordinates (worker, pass, key hash, ...).
uint64_t DeriveSeed(uint64_t base, std::initializer_list<uint64_t> coords);

// Thin wrapper over mt19937_64 with platform-independent conversions, so a
// seed reproduces the same draws with any standard library.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t Next() { return engine_(); }
  // Uniform in [0, 1) with 53 random bits.
  double Uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  // Uniform in [0, n).
  int UniformInt(int n);

 private:
  std::mt19937_64 engine_;
};

}  // namespace beliefmix

#endif  // BELIEFMIX_RNG_H_
