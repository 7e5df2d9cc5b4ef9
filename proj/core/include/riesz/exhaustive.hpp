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

#include <cstdint>
#include <vector>

#include "riesz/circle_grid.hpp"
#include "riesz/construction.hpp"

namespace riesz {

// |Omega| restricted to the first `stages` stages, saturating at UINT64_MAX.
std::uint64_t omega_count(const ConstructionParams& params, int stages);

// Every omega of the first `stages` stages in lexicographic order. Throws
// std::length_error above `limit`.
std::vector<OmegaSample> enumerate_omegas(const ConstructionParams& params, int stages,
                                          std::uint64_t limit = std::uint64_t{1} << 16);

// Exact expectation over Omega (by enumeration) of the grid quadrature of
// R_N = prod_{j<=N} |P_j|.
double exhaustive_mean_abs_product(const ConstructionParams& params, int n,
                                   const CircleGrid& grid);

// Exact expectation over the spacers of stage j of the grid quadrature of
// ||P_j| - |P_j - E P_j||.
double exhaustive_centered_delta(const ConstructionParams& params, int j,
                                 const CircleGrid& grid);

}  // namespace riesz
