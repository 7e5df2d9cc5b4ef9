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

#include "riesz/exhaustive.hpp"

#include <limits>
#include <stdexcept>

#include "riesz/errors.hpp"
#include "riesz/parallel.hpp"
#include "riesz/polyeval.hpp"
#include "riesz/riesz.hpp"

namespace riesz {
namespace {

// Advances omega through the product of the stage supports; false once
// every combination has been visited.
bool next_omega(const ConstructionParams& params, OmegaSample& omega) {
  for (int j = omega.stages(); j >= 1; --j) {
    auto& stage = omega.spacers[static_cast<std::size_t>(j - 1)];
    for (auto it = stage.rbegin(); it != stage.rend(); ++it) {
      if (*it < params.support_max(j)) {
        ++*it;
        return true;
      }
      *it = params.support_min(j);
    }
  }
  return false;
}

std::vector<std::vector<std::int64_t>> enumerate_stage(const ConstructionParams& params, int j) {
  OmegaSample one;
  one.spacers.assign(1, std::vector<std::int64_t>(static_cast<std::size_t>(params.m(j) - 1),
                                                  params.support_min(j)));
  ConstructionParams single = params;
  // next_omega indexes stages from 1; shift stage j into slot 1.
  single.spacers = {params.t(j)};
  single.cuts = {params.m(j)};
  single.stages = 1;
  std::vector<std::vector<std::int64_t>> out;
  do {
    out.push_back(one.spacers[0]);
  } while (next_omega(single, one));
  return out;
}

}  // namespace

std::uint64_t omega_count(const ConstructionParams& params, int stages) {
  std::uint64_t count = 1;
  for (int j = 1; j <= stages; ++j) {
    const auto width = static_cast<std::uint64_t>(params.support_size(j));
    for (std::int64_t k = 1; k < params.m(j); ++k) {
      if (count > std::numeric_limits<std::uint64_t>::max() / width) {
        return std::numeric_limits<std::uint64_t>::max();
      }
      count *= width;
    }
  }
  return count;
}

std::vector<OmegaSample> enumerate_omegas(const ConstructionParams& params, int stages,
                                          std::uint64_t limit) {
  params.validate();
  if (stages < 0 || stages > params.stages) throw InvalidParams("stages out of range");
  if (omega_count(params, stages) > limit) {
    throw std::length_error("Omega is too large to enumerate");
  }
  OmegaSample omega;
  for (int j = 1; j <= stages; ++j) {
    omega.spacers.emplace_back(static_cast<std::size_t>(params.m(j) - 1), params.support_min(j));
  }
  std::vector<OmegaSample> out;
  do {
    out.push_back(omega);
  } while (next_omega(params, omega));
  return out;
}

double exhaustive_mean_abs_product(const ConstructionParams& params, int n,
                                   const CircleGrid& grid) {
  const HeightSequence heights = build_heights(params);
  const auto omegas = enumerate_omegas(params, n);
  std::vector<double> values(omegas.size());
  parallel_for(omegas.size(), resolve_threads(), [&](std::size_t i) {
    values[i] = integrate_circle(partial_abs_product(params, heights, omegas[i], n, grid), grid,
                                 1, Quadrature::kEstimate);
  });
  return pairwise_sum(values.size(), [&](std::size_t i) { return values[i]; }) /
         static_cast<double>(values.size());
}

double exhaustive_centered_delta(const ConstructionParams& params, int j,
                                 const CircleGrid& grid) {
  const HeightSequence heights = build_heights(params);
  std::uint64_t count = 1;
  for (std::int64_t k = 1; k < params.m(j); ++k) {
    count *= static_cast<std::uint64_t>(params.support_size(j));
    if (count > (std::uint64_t{1} << 16)) throw std::length_error("stage support too large to enumerate");
  }
  const auto cases = enumerate_stage(params, j);
  const StageValues mean = eval_mean_polynomial(params, heights, j, grid);
  std::vector<double> values(cases.size());
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const StageValues p = eval_stage_polynomial(stage_exponents(params, heights, j, cases[i]), grid);
    values[i] = pairwise_sum(grid.size(), [&](std::size_t l) {
                  return std::abs(std::abs(p.values[l]) - std::abs(p.values[l] - mean.values[l]));
                }) *
                grid.weight();
  }
  return pairwise_sum(values.size(), [&](std::size_t i) { return values[i]; }) /
         static_cast<double>(values.size());
}

}  // namespace riesz
