// Copyright 2026 The riesz-lab Authors
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

#pragma once

#include <array>
#include <cstdint>

namespace riesz {

// Philox4x32-10 counter-based generator (Salmon et al., SC'11). Every output
// block is a pure function of (key, counter), so draws can be produced in any
// order or on any thread and still reproduce bit-exactly.
class Philox4x32 {
 public:
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static constexpr int kRounds = 10;

  explicit constexpr Philox4x32(Key key) : key_(key) {}
  explicit constexpr Philox4x32(std::uint64_t seed)
      : key_{static_cast<std::uint32_t>(seed),
             static_cast<std::uint32_t>(seed >> 32)} {}

  Counter operator()(Counter ctr) const;

  const Key& key() const { return key_; }

 private:
  Key key_;
};

// Stream tags separating independent uses of one user seed.
enum class Stream : std::uint32_t {
  kSpacers = 0x5350'4143u,
  kGridRotation = 0x524f'5441u,
  kReplicate = 0x5245'504cu,
  kCircleSample = 0x4349'5243u,
  kFubiniStage = 0x4655'4249u,
  kCalibration = 0x4341'4c49u,
};

// 64 random bits keyed by (seed, stream, a, b).
std::uint64_t random_bits(std::uint64_t seed, Stream stream, std::uint32_t a,
                          std::uint32_t b);

// Independent child seed for replicate `index` of `stream`.
std::uint64_t derive_seed(std::uint64_t seed, Stream stream,
                          std::uint64_t index);

// Uniform integer on [lo, hi] from 64 random bits (multiply-shift; bias is at
// most (hi - lo + 1) / 2^64).
std::int64_t uniform_int(std::uint64_t bits, std::int64_t lo, std::int64_t hi);

// Uniform double on [0, 1) with 53 random bits.
inline double uniform_unit(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace riesz
