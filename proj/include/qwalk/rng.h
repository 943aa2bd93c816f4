// Copyright 2026 The qwalk Authors
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

#ifndef QWALK_RNG_H_
#define QWALK_RNG_H_

#include <cstdint>
#include <random>
#include <string_view>

namespace qwalk {

// Recorded in run manifests.
inline constexpr std::string_view kRngAlgorithm =
    "mt19937_64; streams seeded by splitmix64(master, stream)";

std::uint64_t SplitMix64(std::uint64_t x);

// Seed of substream `stream` of `master`. Streams are independent of the
// order in which they are requested, so serial and parallel consumers agree.
std::uint64_t DeriveSeed(std::uint64_t master, std::uint64_t stream);

// Bit-reproducible generator. Everything is derived from raw 64-bit draws
// so results do not depend on the standard library's distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t NextU64() { return engine_(); }
  // Uniform on [0, 1) with 53 random bits.
  double Uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  // Uniform on {0, ..., n - 1}; n > 0.
  std::uint64_t Below(std::uint64_t n);
  double Normal();

 private:
  std::mt19937_64 engine_;
};

}  // namespace qwalk

#endif  // QWALK_RNG_H_
