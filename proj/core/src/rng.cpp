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

#include "riesz/rng.hpp"

namespace riesz {

__extension__ using uint128 = unsigned __int128;
namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi,
                    std::uint32_t& lo) {
  const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(p >> 32);
  lo = static_cast<std::uint32_t>(p);
}

}  // namespace

Philox4x32::Counter Philox4x32::operator()(Counter ctr) const {
  Key key = key_;
  for (int round = 0; round < kRounds; ++round) {
    if (round > 0) {
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kMul0, ctr[0], hi0, lo0);
    mulhilo(kMul1, ctr[2], hi1, lo1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
  }
  return ctr;
}

std::uint64_t random_bits(std::uint64_t seed, Stream stream, std::uint32_t a,
                          std::uint32_t b) {
  const Philox4x32 gen(seed);
  const auto out = gen({a, b, static_cast<std::uint32_t>(stream), 0u});
  return (static_cast<std::uint64_t>(out[1]) << 32) | out[0];
}

std::uint64_t derive_seed(std::uint64_t seed, Stream stream,
                          std::uint64_t index) {
  const Philox4x32 gen(seed);
  const auto out = gen({static_cast<std::uint32_t>(index),
                        static_cast<std::uint32_t>(index >> 32),
                        static_cast<std::uint32_t>(stream), 0xC0FFEEu});
  return (static_cast<std::uint64_t>(out[3]) << 32) | out[2];
}

std::int64_t uniform_int(std::uint64_t bits, std::int64_t lo, std::int64_t hi) {
  const auto range = static_cast<uint128>(
      static_cast<std::uint64_t>(hi - lo) + 1u);
  const auto offset =
      static_cast<std::uint64_t>((static_cast<uint128>(bits) * range) >> 64);
  return lo + static_cast<std::int64_t>(offset);
}

}  // namespace riesz
