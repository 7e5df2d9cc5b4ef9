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

#include "riesz/polyeval.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "riesz/errors.hpp"
#include "riesz/parallel.hpp"

namespace riesz {
namespace {

__extension__ using uint128 = unsigned __int128;

struct Term {
  std::uint64_t step;  // exponent mod M
  double re, im;       // coefficient times rotation phase
};

// out[l] += sum_k c_k * table[(step_k * l) mod M] for l in [first, last).
// Each out[l] receives the terms in index order, so blocking does not change
// the rounding.
void accumulate_block(double* out, const double* roots, std::uint64_t size,
                      const std::vector<Term>& terms, std::uint64_t first,
                      std::uint64_t last) {
  const bool pow2 = (size & (size - 1)) == 0;
  const std::uint64_t mask = size - 1;
  for (const Term& t : terms) {
    // Explicit real arithmetic: std::complex operator* carries NaN recovery
    // that dominates this loop.
    if (pow2) {
      std::uint64_t idx = (t.step * first) & mask;
      for (std::uint64_t l = first; l < last; ++l) {
        const double tr = roots[2 * idx];
        const double ti = roots[2 * idx + 1];
        out[2 * l] += t.re * tr - t.im * ti;
        out[2 * l + 1] += t.re * ti + t.im * tr;
        idx = (idx + t.step) & mask;
      }
    } else {
      auto idx = static_cast<std::uint64_t>((static_cast<uint128>(t.step) * first) % size);
      for (std::uint64_t l = first; l < last; ++l) {
        const double tr = roots[2 * idx];
        const double ti = roots[2 * idx + 1];
        out[2 * l] += t.re * tr - t.im * ti;
        out[2 * l + 1] += t.re * ti + t.im * tr;
        idx += t.step;
        if (idx >= size) idx -= size;
      }
    }
  }
}

}  // namespace

std::vector<std::complex<double>> evaluate_sparse(
    std::span<const std::int64_t> exponents,
    std::span<const std::complex<double>> coeffs, const CircleGrid& grid) {
  const bool shared = coeffs.size() == 1;
  if (!shared && coeffs.size() != exponents.size()) {
    throw std::invalid_argument("coefficient count must match exponents");
  }
  std::vector<Term> terms(exponents.size());
  for (std::size_t k = 0; k < exponents.size(); ++k) {
    const std::int64_t n = exponents[k];
    const std::complex<double> c = (shared ? coeffs[0] : coeffs[k]) * grid.rotation_phase(n);
    terms[k] = {grid.reduce(n), c.real(), c.imag()};
  }
  const std::uint64_t size = grid.size();
  std::vector<std::complex<double>> values(size);
  auto* out = reinterpret_cast<double*>(values.data());
  const auto* roots = reinterpret_cast<const double*>(grid.roots().data());
  constexpr std::uint64_t kBlock = 512;
  for (std::uint64_t first = 0; first < size; first += kBlock) {
    accumulate_block(out, roots, size, terms, first, std::min(size, first + kBlock));
  }
  return values;
}

std::vector<std::complex<double>> evaluate_sparse(
    std::span<const std::int64_t> exponents, std::complex<double> coeff,
    const CircleGrid& grid) {
  return evaluate_sparse(exponents, std::span<const std::complex<double>>(&coeff, 1), grid);
}

StageValues eval_stage_polynomial(const ExponentSet& exps, const CircleGrid& grid) {
  StageValues out;
  out.stage = exps.stage;
  out.values = evaluate_sparse(exps.n, std::complex<double>(1.0, 0.0), grid);
  const double root_m = std::sqrt(static_cast<double>(exps.size()));
  for (auto& v : out.values) v /= root_m;
  out.min_freq = exps.n.empty() ? 0 : exps.n.front();
  out.max_freq = exps.degree();
  return out;
}

namespace {

std::vector<std::int64_t> arithmetic_run(std::int64_t first, std::int64_t count,
                                         std::int64_t step) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) v[static_cast<std::size_t>(i)] = first + i * step;
  return v;
}

}  // namespace

MeanFactors mean_factors(const ConstructionParams& params,
                         const HeightSequence& heights, int j,
                         const CircleGrid& grid) {
  const std::int64_t m = params.m(j);
  const std::int64_t step = heights[j] + params.t(j);
  const std::int64_t lo = params.support_min(j);
  const std::int64_t width = params.support_size(j);

  MeanFactors f;
  f.geometric.stage = j;
  f.geometric.values = evaluate_sparse(arithmetic_run(0, m, step),
                                       1.0 / std::sqrt(static_cast<double>(m)), grid);
  f.geometric.min_freq = 0;
  f.geometric.max_freq = (m - 1) * step;

  f.kernel.stage = j;
  f.kernel.values = evaluate_sparse(arithmetic_run(lo, width, 1),
                                    1.0 / static_cast<double>(width), grid);
  f.kernel.min_freq = lo;
  f.kernel.max_freq = params.support_max(j);
  return f;
}

StageValues eval_mean_polynomial(const ConstructionParams& params,
                                 const HeightSequence& heights, int j,
                                 const CircleGrid& grid) {
  const std::int64_t m = params.m(j);
  const std::int64_t step = heights[j] + params.t(j);
  const std::int64_t lo = params.support_min(j);
  const std::int64_t width = params.support_size(j);

  const auto shifted = evaluate_sparse(arithmetic_run(step, m - 1, step), 1.0, grid);
  const auto kernel = evaluate_sparse(arithmetic_run(lo, width, 1),
                                      1.0 / static_cast<double>(width), grid);
  const double root_m = std::sqrt(static_cast<double>(m));

  StageValues out;
  out.stage = j;
  out.values.resize(grid.size());
  for (std::size_t l = 0; l < out.values.size(); ++l) {
    out.values[l] = (1.0 + kernel[l] * shifted[l]) / root_m;
  }
  out.min_freq = std::min<std::int64_t>(0, step + lo);
  out.max_freq = (m - 1) * step + params.support_max(j);
  return out;
}

StageValues multiply(const StageValues& a, const StageValues& b) {
  if (a.size() != b.size()) throw std::invalid_argument("grid size mismatch");
  StageValues out;
  out.stage = a.stage;
  out.values.resize(a.size());
  for (std::size_t l = 0; l < a.size(); ++l) out.values[l] = a.values[l] * b.values[l];
  out.min_freq = a.min_freq + b.min_freq;
  out.max_freq = a.max_freq + b.max_freq;
  return out;
}

double l2_norm(const StageValues& values, const CircleGrid& grid, Quadrature mode) {
  if (values.size() != grid.size()) throw std::invalid_argument("grid size mismatch");
  if (mode == Quadrature::kExact &&
      static_cast<std::uint64_t>(values.span()) >= grid.size()) {
    std::ostringstream os;
    os << "grid of " << grid.size() << " points cannot integrate |f|^2 exactly for "
       << "frequency span " << values.span();
    throw GridTooCoarse(os.str());
  }
  const double sum = pairwise_sum(values.size(), [&](std::size_t l) {
    return std::norm(values.values[l]);
  });
  return std::sqrt(sum * grid.weight());
}

double l1_norm(const StageValues& values, const CircleGrid& grid) {
  if (values.size() != grid.size()) throw std::invalid_argument("grid size mismatch");
  const double sum = pairwise_sum(values.size(), [&](std::size_t l) {
    return std::abs(values.values[l]);
  });
  return sum * grid.weight();
}

}  // namespace riesz
