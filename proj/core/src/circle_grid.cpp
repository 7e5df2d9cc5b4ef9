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

#include "riesz/circle_grid.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace riesz {

__extension__ using uint128 = unsigned __int128;
namespace {

std::shared_ptr<const std::vector<std::complex<double>>> shared_roots(
    std::uint64_t size) {
  static std::mutex mu;
  static std::map<std::uint64_t, std::weak_ptr<const std::vector<std::complex<double>>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto hit = cache[size].lock()) return hit;
  auto table = std::make_shared<std::vector<std::complex<double>>>(size);
  const bool pow2 = (size & (size - 1)) == 0;
  for (std::uint64_t r = 0; r < size; ++r) {
    if (pow2) {
      const int shift = 64 - std::countr_zero(size);
      (*table)[r] = unit_from_turns(shift == 64 ? 0 : r << shift);
    } else {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) /
                           static_cast<double>(size);
      (*table)[r] = {std::cos(angle), std::sin(angle)};
    }
  }
  std::shared_ptr<const std::vector<std::complex<double>>> out = std::move(table);
  cache[size] = out;
  return out;
}

}  // namespace

std::complex<double> unit_from_turns(std::uint64_t turns) {
  // Quarter turns are exact so that roots of unity cancel to exact zeros.
  constexpr std::uint64_t kQuarter = std::uint64_t{1} << 62;
  if (turns % kQuarter == 0) {
    switch (turns / kQuarter) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  // Fold to [-1/2, 1/2) of a turn so the argument stays small.
  const auto signed_turns = static_cast<std::int64_t>(turns);
  const double angle =
      2.0 * std::numbers::pi * (static_cast<double>(signed_turns) * 0x1.0p-64);
  return {std::cos(angle), std::sin(angle)};
}

CircleGrid::CircleGrid(std::uint64_t size, std::uint64_t rotation)
    : size_(size), rotation_(rotation) {
  if (size < 2) throw std::invalid_argument("circle grid needs at least 2 points");
  if (size > kMaxSize) throw std::invalid_argument("circle grid larger than 2^26 points");
  if (rotation != 0 && !power_of_two()) {
    throw std::invalid_argument("rotated grids require a power-of-two size");
  }
  roots_ = shared_roots(size);
}

std::uint64_t CircleGrid::reduce(std::int64_t n) const {
  const auto m = static_cast<std::int64_t>(size_);
  std::int64_t r = n % m;
  if (r < 0) r += m;
  return static_cast<std::uint64_t>(r);
}

std::complex<double> CircleGrid::rotation_phase(std::int64_t n) const {
  if (rotation_ == 0) return {1.0, 0.0};
  return unit_from_turns(static_cast<std::uint64_t>(n) * rotation_);
}

std::complex<double> CircleGrid::power(std::int64_t n, std::uint64_t l) const {
  const auto idx = static_cast<std::uint64_t>(
      (static_cast<uint128>(reduce(n)) * (l % size_)) % size_);
  const std::complex<double> base = (*roots_)[idx];
  return rotation_ == 0 ? base : base * rotation_phase(n);
}

std::uint64_t power_of_two_at_least(std::uint64_t n) {
  std::uint64_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

std::uint64_t auto_grid_size(std::int64_t span, std::uint64_t factor,
                             std::uint64_t minimum) {
  const auto want = static_cast<std::uint64_t>(span < 1 ? 1 : span) * factor;
  return power_of_two_at_least(want < minimum ? minimum : want);
}

}  // namespace riesz
