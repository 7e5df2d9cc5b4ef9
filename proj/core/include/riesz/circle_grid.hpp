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

#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

namespace riesz {

// M equispaced points z_l = exp(2 pi i (l / M + phi)) on the unit circle with
// quadrature weight 1/M. The rotation phi is a 64-bit fixed-point fraction of
// a turn and is only available for power-of-two M, where every phase
// n (l / M + phi) reduces exactly in uint64 arithmetic.
//
// Without rotation the rectangle rule integrates z^n to [n = 0 mod M]. With a
// random rotation it is an unbiased estimator of the integral of any
// integrable function, and still exact for frequencies below M.
class CircleGrid {
 public:
  static constexpr std::uint64_t kMaxSize = std::uint64_t{1} << 26;

  explicit CircleGrid(std::uint64_t size, std::uint64_t rotation = 0);

  std::uint64_t size() const { return size_; }
  std::uint64_t rotation() const { return rotation_; }
  bool power_of_two() const { return (size_ & (size_ - 1)) == 0; }
  double weight() const { return 1.0 / static_cast<double>(size_); }

  // n mod M in [0, M).
  std::uint64_t reduce(std::int64_t n) const;

  // z_l^n, with the exponent reduced exactly before any rounding.
  std::complex<double> power(std::int64_t n, std::uint64_t l) const;

  // exp(2 pi i n phi): the rotation's contribution to z_l^n.
  std::complex<double> rotation_phase(std::int64_t n) const;

  // exp(2 pi i r / M) for r in [0, M); shared across grids of equal size.
  const std::vector<std::complex<double>>& roots() const { return *roots_; }

 private:
  std::uint64_t size_;
  std::uint64_t rotation_;
  std::shared_ptr<const std::vector<std::complex<double>>> roots_;
};

// exp(2 pi i x / 2^64).
std::complex<double> unit_from_turns(std::uint64_t turns);

// Smallest power of two >= max(minimum, factor * span).
std::uint64_t power_of_two_at_least(std::uint64_t n);
std::uint64_t auto_grid_size(std::int64_t span, std::uint64_t factor = 4,
                             std::uint64_t minimum = 64);

}  // namespace riesz
