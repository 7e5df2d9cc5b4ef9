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

#include "riesz/construction.hpp"

#include <sstream>
#include <utility>

#include "riesz/errors.hpp"
#include "riesz/rng.hpp"

namespace riesz {
namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b, const char* what) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw OverflowError(std::string("int64 overflow computing ") + what);
  }
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b, const char* what) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw OverflowError(std::string("int64 overflow computing ") + what);
  }
  return r;
}

// Largest exponent stage j can produce for any omega.
std::int64_t max_stage_degree(const ConstructionParams& p, std::int64_t h, int j) {
  const std::int64_t step = checked_add(h, p.t(j), "h_j + t_j");
  const std::int64_t top = checked_mul(p.m(j) - 1, step, "stage degree");
  return checked_add(top, p.support_max(j), "stage degree");
}

}  // namespace

std::string_view to_string(SpacerSupport support) {
  return support == SpacerSupport::kSymmetric ? "symmetric" : "nonnegative";
}

SpacerSupport parse_support(std::string_view name) {
  if (name == "symmetric" || name == "Symmetric") return SpacerSupport::kSymmetric;
  if (name == "nonnegative" || name == "NonNegative" || name == "non-negative") {
    return SpacerSupport::kNonNegative;
  }
  throw InvalidParams("unknown spacer support '" + std::string(name) +
                      "' (expected symmetric or nonnegative)");
}

void ConstructionParams::validate() const {
  if (stages < 1) throw InvalidParams("stages must be >= 1");
  if (cuts.size() < static_cast<std::size_t>(stages) ||
      spacers.size() < static_cast<std::size_t>(stages)) {
    throw InvalidParams("m and t must have at least `stages` entries");
  }
  if (initial_height < 1) throw InvalidParams("h1 must be >= 1");
  for (int j = 1; j <= stages; ++j) {
    if (m(j) < 2) {
      std::ostringstream os;
      os << "m_" << j << " = " << m(j) << " must be >= 2";
      throw InvalidParams(os.str());
    }
    if (t(j) < 1) {
      std::ostringstream os;
      os << "t_" << j << " = " << t(j) << " must be >= 1";
      throw InvalidParams(os.str());
    }
    if (m(j) > (std::int64_t{1} << 31)) {
      throw InvalidParams("m_j above 2^31 is not supported");
    }
  }
}

ConstructionParams ConstructionParams::truncated(int n) const {
  if (n < 1 || n > stages) throw InvalidParams("truncation outside [1, stages]");
  ConstructionParams out = *this;
  out.cuts.resize(static_cast<std::size_t>(n));
  out.spacers.resize(static_cast<std::size_t>(n));
  out.stages = n;
  return out;
}

HeightSequence build_heights(const ConstructionParams& params) {
  params.validate();
  std::vector<std::int64_t> h;
  h.reserve(static_cast<std::size_t>(params.stages) + 1);
  h.push_back(params.initial_height);
  for (int j = 1; j <= params.stages; ++j) {
    const std::int64_t hj = h.back();
    if (params.support == SpacerSupport::kSymmetric && hj <= params.t(j)) {
      std::ostringstream os;
      os << "symmetric spacers need h_" << j << " > t_" << j << " (h=" << hj
         << ", t=" << params.t(j) << ")";
      throw InvalidParams(os.str());
    }
    max_stage_degree(params, hj, j);
    const std::int64_t step = checked_add(hj, params.t(j), "h_j + t_j");
    h.push_back(checked_mul(params.m(j), step, "h_{j+1}"));
  }
  return HeightSequence(std::move(h));
}

std::int64_t spacer_draw(const ConstructionParams& params, std::uint64_t seed,
                         int j, std::int64_t k) {
  const std::uint64_t bits =
      random_bits(seed, Stream::kSpacers, static_cast<std::uint32_t>(k),
                  static_cast<std::uint32_t>(j));
  return uniform_int(bits, params.support_min(j), params.support_max(j));
}

std::vector<std::int64_t> sample_stage(const ConstructionParams& params,
                                       std::uint64_t seed, int j) {
  std::vector<std::int64_t> w(static_cast<std::size_t>(params.m(j) - 1));
  for (std::size_t k = 0; k < w.size(); ++k) {
    w[k] = spacer_draw(params, seed, j, static_cast<std::int64_t>(k) + 1);
  }
  return w;
}

OmegaSample sample_omega(const ConstructionParams& params, std::uint64_t seed,
                         int stages) {
  params.validate();
  if (stages < 0 || stages > params.stages) {
    throw InvalidParams("requested more stages than the parameters define");
  }
  OmegaSample omega;
  omega.seed = seed;
  omega.spacers.reserve(static_cast<std::size_t>(stages));
  for (int j = 1; j <= stages; ++j) omega.spacers.push_back(sample_stage(params, seed, j));
  return omega;
}

ExponentSet stage_exponents(const ConstructionParams& params,
                            const HeightSequence& heights, int j,
                            std::span<const std::int64_t> stage_spacers) {
  if (j < 1 || j > params.stages || j >= heights.size() + 1) {
    throw InvalidParams("stage index out of range");
  }
  const std::int64_t m = params.m(j);
  if (static_cast<std::int64_t>(stage_spacers.size()) != m - 1) {
    throw InvalidParams("stage spacer vector must have m_j - 1 entries");
  }
  const std::int64_t step = heights[j] + params.t(j);
  ExponentSet out;
  out.stage = j;
  out.n.resize(static_cast<std::size_t>(m));
  out.n[0] = 0;
  for (std::int64_t k = 1; k < m; ++k) {
    const std::int64_t w = stage_spacers[static_cast<std::size_t>(k - 1)];
    if (w < params.support_min(j) || w > params.support_max(j)) {
      throw InvalidParams("spacer outside the configured support");
    }
    out.n[static_cast<std::size_t>(k)] = k * step + w;
  }
  for (std::size_t k = 1; k < out.n.size(); ++k) {
    if (out.n[k] <= out.n[k - 1]) {
      std::ostringstream os;
      os << "stage " << j << " exponents not strictly increasing at k=" << k;
      throw InternalError(os.str());
    }
  }
  return out;
}

ExponentSet stage_exponents(const ConstructionParams& params,
                            const HeightSequence& heights,
                            const OmegaSample& omega, int j) {
  if (j < 1 || j > omega.stages()) {
    throw InvalidParams("stage not present in the omega sample");
  }
  return stage_exponents(params, heights, j, omega.stage(j));
}

DissociationReport check_dissociation(const ConstructionParams& params,
                                      const HeightSequence& heights) {
  DissociationReport report;
  std::int64_t lower = 0;
  for (int j = 1; j <= params.stages; ++j) {
    const std::int64_t h = heights[j];
    const std::int64_t step = h + params.t(j);
    // Gap n_1 - n_0 is step + omega_1; later gaps are step + omega_{k+1} - omega_k.
    std::int64_t gap = step + params.support_min(j);
    if (params.m(j) >= 3) {
      gap = step + params.support_min(j) - params.support_max(j);
    }
    DissociationStage s;
    s.stage = j;
    s.min_gap = gap;
    s.lower_degree = lower;
    s.separated = j == 1 || gap > lower;
    if (!s.separated && report.dissociated) {
      report.dissociated = false;
      std::ostringstream os;
      os << "stage " << j << ": min gap " << gap
         << " does not exceed lower degree " << lower;
      report.reason = os.str();
    }
    report.stages.push_back(s);
    lower = checked_add(lower, max_stage_degree(params, h, j), "lower degree");
  }
  return report;
}

DissociationReport check_dissociation(const ConstructionParams& params) {
  try {
    return check_dissociation(params, build_heights(params));
  } catch (const InvalidParams& e) {
    DissociationReport report;
    report.dissociated = false;
    report.reason = e.what();
    return report;
  } catch (const OverflowError& e) {
    DissociationReport report;
    report.dissociated = false;
    report.reason = e.what();
    return report;
  }
}

}  // namespace riesz
