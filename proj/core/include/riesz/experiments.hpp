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

#include <cstddef>
#include <cstdint>
#include <vector>

#include "riesz/circle_grid.hpp"
#include "riesz/construction.hpp"
#include "riesz/report.hpp"

namespace riesz {

// Shared knobs for every experiment. Results never depend on `threads`.
struct RunOptions {
  int threads = 0;  // 0: RIESZ_LAB_THREADS or hardware concurrency
};

// Monte Carlo experiments sample one omega per replicate and integrate over a
// power-of-two grid rotated by a replicate-specific random angle, which keeps
// the circle integral unbiased for integrands of any degree.
inline constexpr std::uint64_t kMonteCarloGridCap = std::uint64_t{1} << 16;

// Grid for replicate `index`: rotated when `size` is a power of two.
CircleGrid replicate_grid(std::uint64_t size, std::uint64_t seed, std::uint64_t index);

// grid_size == 0 selects 4x the frequency span rounded up to a power of two,
// capped at `cap`.
std::uint64_t resolve_grid_size(std::uint64_t grid_size, std::int64_t span,
                                std::uint64_t cap = kMonteCarloGridCap);

// E_omega int |P_j(omega, z)| dz; tends to sqrt(pi)/2 as m_j, t_j grow.
ExperimentReport estimate_mean_abs(const ConstructionParams& params, int j,
                                   std::size_t n_omega, std::uint64_t grid_size,
                                   std::uint64_t seed, RunOptions options = {});

// Delta = E int ||P_j| - |P_j - E P_j|| dz against the Cauchy-Schwarz bound
// |support_j|^{-1/2}.
ExperimentReport centered_comparison(const ConstructionParams& params, int j,
                                     std::size_t n_omega, std::uint64_t grid_size,
                                     std::uint64_t seed, RunOptions options = {});

struct CltOptions {
  std::uint64_t grid_size = 0;  // 0: exact grid for P_j
  int calibration_runs = 100;
  double calibration_quantile = 0.99;
};

// Samples |X| = |P_j - E P_j| at (omega, z) pairs, z uniform on the grid,
// and measures the KS distance to Rayleigh(1/sqrt 2).
ExperimentReport clt_distribution_test(const ConstructionParams& params, int j,
                                       std::size_t n_samples, std::uint64_t seed,
                                       RunOptions options = {},
                                       CltOptions clt = {});

// L(eps) = s^{-2} sum_k E[|Y_k|^2 1{|Y_k| > eps s}] for the centered summands
// Y_k = (z^{n_{j,k}} - E z^{n_{j,k}}) / sqrt(m_j).
ExperimentReport lindeberg_ratio(const ConstructionParams& params, int j,
                                 double eps, std::size_t n_samples,
                                 std::uint64_t seed, RunOptions options = {});

// L(eps) along increasing m_j with common random numbers; gates on the
// sequence decreasing toward 0.
ExperimentReport lindeberg_ladder(const ConstructionParams& params, int j,
                                  double eps, const std::vector<std::int64_t>& ladder,
                                  std::size_t n_samples, std::uint64_t seed,
                                  RunOptions options = {});

// I_N = E_omega int R_N d lambda for N = 0..n_max.
ExperimentReport decay_experiment(const ConstructionParams& params, int n_max,
                                  std::size_t n_omega, std::uint64_t grid_size,
                                  std::uint64_t seed, RunOptions options = {});

// int E_Omega prod_j |P_j| dz (joint omega) against int prod_j E_Omega |P_j| dz
// (one independent omega batch per stage).
ExperimentReport fubini_check(const ConstructionParams& params, int n,
                              std::size_t n_omega, std::uint64_t grid_size,
                              std::uint64_t seed, RunOptions options = {},
                              std::size_t per_stage_samples = 4);

}  // namespace riesz
