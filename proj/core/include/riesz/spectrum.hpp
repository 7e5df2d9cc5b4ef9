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
#include <span>
#include <vector>

#include "riesz/construction.hpp"

namespace riesz {

// Exact Fourier coefficients of the density prod_j |P_j|^2 computed in
// coefficient space, independent of any grid. Each |P_j|^2 is
// (1/m_j) sum_{k,k'} z^{n_k - n_k'}; the coefficient of z^n in the product is
// a sum over one difference per stage, enumerated from the top stage down and
// pruned whenever the remaining stages cannot reach the target. The
// enumeration is exhaustive over every surviving branch, so the result is
// exact for any exponents; for dissociated stages only the all-zero branch
// survives and the work is linear in the stage count.
class DensitySpectrum {
 public:
  explicit DensitySpectrum(std::span<const ExponentSet> stages);

  // Coefficient of z^n in prod_j |P_j|^2.
  double coefficient(std::int64_t n) const;

  // Integral of prod_j |P_j|^2 d lambda (the zeroth coefficient).
  double mass() const { return coefficient(0); }

  // Frequencies of the density lie in [-degree(), degree()].
  std::int64_t degree() const { return reach_.back(); }

  // Surviving branches visited by the last coefficient() call.
  std::uint64_t last_branch_count() const { return branches_; }

 private:
  struct Differences {
    std::vector<std::int64_t> diff;  // ascending, distinct
    std::vector<double> weight;      // multiplicity / m_j
  };

  double descend(std::size_t level, std::int64_t target) const;

  std::vector<Differences> stages_;
  std::vector<std::int64_t> reach_;  // reach_[j] = sum of spans of stages < j
  mutable std::uint64_t branches_ = 0;
};

// Builds the spectrum of R_N^2 for stages 1..N of omega.
DensitySpectrum density_spectrum(const ConstructionParams& params,
                                 const HeightSequence& heights,
                                 const OmegaSample& omega, int n);

}  // namespace riesz
