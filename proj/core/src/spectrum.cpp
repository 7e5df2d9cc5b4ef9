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

#include "riesz/spectrum.hpp"

#include <algorithm>

#include "riesz/errors.hpp"

namespace riesz {

DensitySpectrum::DensitySpectrum(std::span<const ExponentSet> stages) {
  reach_.push_back(0);
  for (const auto& exps : stages) {
    std::vector<std::int64_t> all;
    all.reserve(exps.size() * exps.size());
    for (auto a : exps.n) {
      for (auto b : exps.n) all.push_back(a - b);
    }
    std::sort(all.begin(), all.end());
    Differences d;
    const double inv_m = 1.0 / static_cast<double>(exps.size());
    for (std::size_t i = 0; i < all.size();) {
      std::size_t k = i;
      while (k < all.size() && all[k] == all[i]) ++k;
      d.diff.push_back(all[i]);
      d.weight.push_back(static_cast<double>(k - i) * inv_m);
      i = k;
    }
    const std::int64_t span = exps.n.empty() ? 0 : exps.n.back() - exps.n.front();
    reach_.push_back(reach_.back() + span);
    stages_.push_back(std::move(d));
  }
}

double DensitySpectrum::descend(std::size_t level, std::int64_t target) const {
  if (level == 0) return target == 0 ? 1.0 : 0.0;
  ++branches_;
  const Differences& d = stages_[level - 1];
  const std::int64_t below = reach_[level - 1];
  // Need |target - diff| <= below.
  const auto first = std::lower_bound(d.diff.begin(), d.diff.end(), target - below);
  const auto last = std::upper_bound(d.diff.begin(), d.diff.end(), target + below);
  double sum = 0.0;
  for (auto it = first; it != last; ++it) {
    const auto idx = static_cast<std::size_t>(it - d.diff.begin());
    sum += d.weight[idx] * descend(level - 1, target - *it);
  }
  return sum;
}

double DensitySpectrum::coefficient(std::int64_t n) const {
  branches_ = 0;
  if (n > degree() || n < -degree()) return 0.0;
  return descend(stages_.size(), n);
}

DensitySpectrum density_spectrum(const ConstructionParams& params,
                                 const HeightSequence& heights,
                                 const OmegaSample& omega, int n) {
  if (n < 0 || n > omega.stages()) {
    throw InvalidParams("density spectrum needs N <= sampled stages");
  }
  std::vector<ExponentSet> sets;
  sets.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) sets.push_back(stage_exponents(params, heights, omega, j));
  return DensitySpectrum(sets);
}

}  // namespace riesz
