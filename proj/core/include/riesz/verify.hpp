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

#include "riesz/construction.hpp"
#include "riesz/experiments.hpp"
#include "riesz/report.hpp"

namespace riesz {

struct VerifyOptions {
  std::uint64_t max_exact_grid = std::uint64_t{1} << 22;
  std::int64_t fourier_window = 16;       // |n| <= window for stabilization checks
  std::size_t oracle_samples = 256;       // Monte Carlo replicates against enumeration
  std::uint64_t enumeration_limit = 4096;  // largest Omega checked exhaustively
};

// Invariant suite for one parameter set: mass of every partial density (exact
// coefficient route, and grid quadrature where the exact grid fits), the
// factorization R_K^2 = R_N^2 prod_{N<j<=K} |P_j|^2, Fourier-coefficient
// stabilization in N, and Monte Carlo against exhaustive enumeration of Omega
// when Omega is small.
ExperimentReport verify(const ConstructionParams& params, std::uint64_t seed,
                        RunOptions options = {}, VerifyOptions verify_options = {});

}  // namespace riesz
