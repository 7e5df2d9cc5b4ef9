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
#include <span>
#include <vector>

#include "riesz/circle_grid.hpp"
#include "riesz/construction.hpp"

namespace riesz {

// A trigonometric polynomial sampled on a CircleGrid. min_freq/max_freq
// bound its frequency support, which decides whether grid quadrature of
// |values|^2 is exact.
struct StageValues {
  int stage = 0;
  std::vector<std::complex<double>> values;
  std::int64_t min_freq = 0;
  std::int64_t max_freq = 0;

  std::int64_t span() const { return max_freq - min_freq; }
  std::size_t size() const { return values.size(); }
};

enum class Quadrature {
  kExact,     // throw GridTooCoarse unless the rectangle rule is exact
  kEstimate,  // accept the rectangle rule as an approximation
};

// sum_k coeffs[k] z_l^{exponents[k]} by direct sparse summation, O(M * K).
// A single coefficient applies to every term.
std::vector<std::complex<double>> evaluate_sparse(
    std::span<const std::int64_t> exponents,
    std::span<const std::complex<double>> coeffs, const CircleGrid& grid);
std::vector<std::complex<double>> evaluate_sparse(
    std::span<const std::int64_t> exponents, std::complex<double> coeff,
    const CircleGrid& grid);

// P_j(omega, z_l) = m_j^{-1/2} sum_k z_l^{n_{j,k}}.
StageValues eval_stage_polynomial(const ExponentSet& exps, const CircleGrid& grid);

// E_Omega P_j(., z_l) = m_j^{-1/2} (1 + K_j(z) sum_{p=1}^{m_j-1} z^{p(h_j+t_j)}),
// with K_j the spacer kernel E z^{omega_{j,k}}. n_{j,0} = 0 carries no spacer.
StageValues eval_mean_polynomial(const ConstructionParams& params,
                                 const HeightSequence& heights, int j,
                                 const CircleGrid& grid);

// The two factors of the classical factorization of the mean:
//   geometric(z) = m^{-1/2} sum_{p=0}^{m-1} z^{p(h+t)}   (unit L2 norm)
//   kernel(z)    = |support|^{-1} sum_{s in support} z^s  (L2 norm |support|^{-1/2})
struct MeanFactors {
  StageValues geometric;
  StageValues kernel;
};

MeanFactors mean_factors(const ConstructionParams& params,
                         const HeightSequence& heights, int j,
                         const CircleGrid& grid);

// Pointwise product, with frequency support added.
StageValues multiply(const StageValues& a, const StageValues& b);

// sqrt((1/M) sum_l |values[l]|^2). Exact iff M > span.
double l2_norm(const StageValues& values, const CircleGrid& grid,
               Quadrature mode = Quadrature::kExact);

// (1/M) sum_l |values[l]|; an estimate of the L1 norm.
double l1_norm(const StageValues& values, const CircleGrid& grid);

}  // namespace riesz
