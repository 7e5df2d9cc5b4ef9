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
#include <string>
#include <string_view>
#include <vector>

namespace riesz {

// Law of the spacer coordinates omega_{j,k}.
enum class SpacerSupport {
  kSymmetric,    // uniform on {-t_j, ..., t_j}
  kNonNegative,  // uniform on {0, ..., t_j}
};

std::string_view to_string(SpacerSupport support);
SpacerSupport parse_support(std::string_view name);

// Stage data for Ornstein's random rank-one construction. Stages are
// 1-based throughout the public API, matching the usual P_1, P_2, ...
struct ConstructionParams {
  std::vector<std::int64_t> cuts;     // m_j >= 2
  std::vector<std::int64_t> spacers;  // t_j >= 1
  std::int64_t initial_height = 1;    // h_1 >= 1
  SpacerSupport support = SpacerSupport::kSymmetric;
  int stages = 1;

  // Throws InvalidParams on a shape or range violation. Height-dependent
  // guards are checked by build_heights().
  void validate() const;

  std::int64_t m(int j) const { return cuts.at(static_cast<std::size_t>(j - 1)); }
  std::int64_t t(int j) const { return spacers.at(static_cast<std::size_t>(j - 1)); }

  std::int64_t support_min(int j) const {
    return support == SpacerSupport::kSymmetric ? -t(j) : 0;
  }
  std::int64_t support_max(int j) const { return t(j); }
  std::int64_t support_size(int j) const {
    return support_max(j) - support_min(j) + 1;
  }

  // Copy restricted to the first `n` stages.
  ConstructionParams truncated(int n) const;

  bool operator==(const ConstructionParams&) const = default;
};

// Tower heights h_1 .. h_{stages+1} with h_{j+1} = m_j (h_j + t_j).
class HeightSequence {
 public:
  HeightSequence() = default;
  explicit HeightSequence(std::vector<std::int64_t> heights)
      : heights_(std::move(heights)) {}

  std::int64_t operator[](int j) const {
    return heights_.at(static_cast<std::size_t>(j - 1));
  }
  int size() const { return static_cast<int>(heights_.size()); }
  std::span<const std::int64_t> values() const { return heights_; }

 private:
  std::vector<std::int64_t> heights_;
};

// Throws OverflowError if a height or a maximal stage exponent leaves the
// int64 range; InvalidParams if Symmetric support has h_j <= t_j.
HeightSequence build_heights(const ConstructionParams& params);

// One draw omega from Omega: spacers[j-1] holds omega_{j,1..m_j-1}.
struct OmegaSample {
  std::vector<std::vector<std::int64_t>> spacers;
  std::uint64_t seed = 0;

  int stages() const { return static_cast<int>(spacers.size()); }
  std::span<const std::int64_t> stage(int j) const {
    return spacers.at(static_cast<std::size_t>(j - 1));
  }
};

// omega_{j,k} for 1 <= k <= m_j - 1 as a pure function of (seed, j, k).
std::int64_t spacer_draw(const ConstructionParams& params, std::uint64_t seed,
                         int j, std::int64_t k);

std::vector<std::int64_t> sample_stage(const ConstructionParams& params,
                                       std::uint64_t seed, int j);

OmegaSample sample_omega(const ConstructionParams& params, std::uint64_t seed,
                         int stages);

// n_{j,0} = 0, n_{j,k} = k (h_j + t_j) + omega_{j,k}.
struct ExponentSet {
  int stage = 0;
  std::vector<std::int64_t> n;

  std::int64_t degree() const { return n.empty() ? 0 : n.back(); }
  std::size_t size() const { return n.size(); }
};

ExponentSet stage_exponents(const ConstructionParams& params,
                            const HeightSequence& heights, int j,
                            std::span<const std::int64_t> stage_spacers);

// Throws InternalError if the exponents fail to increase strictly.
ExponentSet stage_exponents(const ConstructionParams& params,
                            const HeightSequence& heights,
                            const OmegaSample& omega, int j);

struct DissociationStage {
  int stage = 0;
  std::int64_t min_gap = 0;       // smallest nonzero |n_{j,k} - n_{j,k'}|, worst case over omega
  std::int64_t lower_degree = 0;  // worst-case degree of prod_{i<j} |P_i|^2
  bool separated = true;          // min_gap > lower_degree
};

// Whether every partial density prod_{j<=N} |P_j|^2 has constant term 1 for
// every omega, via the scale-separation test on each stage.
struct DissociationReport {
  bool dissociated = true;
  std::string reason;
  std::vector<DissociationStage> stages;
};

DissociationReport check_dissociation(const ConstructionParams& params,
                                      const HeightSequence& heights);

// Variant that reports guard violations as "not dissociated" instead of
// throwing.
DissociationReport check_dissociation(const ConstructionParams& params);

}  // namespace riesz
