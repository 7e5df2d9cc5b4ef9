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

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "riesz/circle_grid.hpp"
#include "riesz/construction.hpp"
#include "riesz/polyeval.hpp"

namespace riesz {

// R_N(z_l) = prod_{j in stages} |P_j(z_l)| stored as log R_N with an explicit
// mask for points where some factor vanishes exactly. The density R_N^2 has
// frequencies in [-density_degree, density_degree].
struct PartialProduct {
  int factors = 0;
  std::vector<double> log_values;
  std::vector<std::uint8_t> zero_mask;
  std::int64_t density_degree = 0;

  std::size_t size() const { return log_values.size(); }

  // R_N(z_l)^power, 0 on masked points.
  double value(std::size_t l, int power = 1) const {
    return zero_mask[l] ? 0.0 : std::exp(power * log_values[l]);
  }
};

// R_0 = 1 on every grid point.
PartialProduct empty_product(const CircleGrid& grid);

// Multiplies one more |P_j| into the product.
void multiply_abs(PartialProduct& product, const StageValues& stage);

// R_a * R_b pointwise (disjoint stage sets).
PartialProduct combine(const PartialProduct& a, const PartialProduct& b);

// prod_{j=first}^{last} |P_j(omega, .)|; an empty range yields R_0.
PartialProduct partial_abs_product(const ConstructionParams& params,
                                   const HeightSequence& heights,
                                   const OmegaSample& omega, int first, int last,
                                   const CircleGrid& grid);

// R_N = prod_{j<=N} |P_j(omega, .)|.
PartialProduct partial_abs_product(const ConstructionParams& params,
                                   const HeightSequence& heights,
                                   const OmegaSample& omega, int n,
                                   const CircleGrid& grid);

// (1/M) sum_l R_N(z_l)^power for power in {1, 2}. With power 2 and
// Quadrature::kExact, requires M > density_degree (exact integral of R_N^2).
double integrate_circle(const PartialProduct& product, const CircleGrid& grid,
                        int power, Quadrature mode = Quadrature::kExact);

// (1/M) sum_l |values[l]|^power.
double integrate_circle(const StageValues& values, const CircleGrid& grid,
                        int power, Quadrature mode = Quadrature::kExact);

// (1/M) sum_l R_N(z_l)^2 z_l^{-n}: the n-th Fourier coefficient of the
// density R_N^2 d lambda. Requires M > density_degree + |n|, which rules out
// aliasing from any other frequency.
std::complex<double> fourier_coefficient(const PartialProduct& product,
                                         std::int64_t n, const CircleGrid& grid);

}  // namespace riesz
