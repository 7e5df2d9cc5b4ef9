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

#include "riesz/riesz.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "riesz/errors.hpp"
#include "riesz/parallel.hpp"

namespace riesz {

PartialProduct empty_product(const CircleGrid& grid) {
  PartialProduct p;
  p.log_values.assign(grid.size(), 0.0);
  p.zero_mask.assign(grid.size(), 0);
  return p;
}

void multiply_abs(PartialProduct& product, const StageValues& stage) {
  if (stage.size() != product.size()) throw std::invalid_argument("grid size mismatch");
  for (std::size_t l = 0; l < product.size(); ++l) {
    const double a = std::abs(stage.values[l]);
    if (a == 0.0) {
      product.zero_mask[l] = 1;
    } else {
      product.log_values[l] += std::log(a);
    }
  }
  product.factors += 1;
  product.density_degree += stage.span();
}

PartialProduct combine(const PartialProduct& a, const PartialProduct& b) {
  if (a.size() != b.size()) throw std::invalid_argument("grid size mismatch");
  PartialProduct out = a;
  for (std::size_t l = 0; l < out.size(); ++l) {
    out.log_values[l] += b.log_values[l];
    out.zero_mask[l] |= b.zero_mask[l];
  }
  out.factors += b.factors;
  out.density_degree += b.density_degree;
  return out;
}

PartialProduct partial_abs_product(const ConstructionParams& params,
                                   const HeightSequence& heights,
                                   const OmegaSample& omega, int first, int last,
                                   const CircleGrid& grid) {
  PartialProduct p = empty_product(grid);
  for (int j = first; j <= last; ++j) {
    multiply_abs(p, eval_stage_polynomial(stage_exponents(params, heights, omega, j), grid));
  }
  return p;
}

PartialProduct partial_abs_product(const ConstructionParams& params,
                                   const HeightSequence& heights,
                                   const OmegaSample& omega, int n,
                                   const CircleGrid& grid) {
  if (n < 0 || n > omega.stages()) {
    throw InvalidParams("partial product needs N <= sampled stages");
  }
  return partial_abs_product(params, heights, omega, 1, n, grid);
}

namespace {

void require_exact_mass(std::int64_t degree, const CircleGrid& grid) {
  if (static_cast<std::uint64_t>(degree) >= grid.size()) {
    std::ostringstream os;
    os << "grid of " << grid.size() << " points is too coarse for a density of degree "
       << degree;
    throw GridTooCoarse(os.str());
  }
}

}  // namespace

double integrate_circle(const PartialProduct& product, const CircleGrid& grid,
                        int power, Quadrature mode) {
  if (power != 1 && power != 2) throw std::invalid_argument("power must be 1 or 2");
  if (product.size() != grid.size()) throw std::invalid_argument("grid size mismatch");
  if (power == 2 && mode == Quadrature::kExact) {
    require_exact_mass(product.density_degree, grid);
  }
  const double sum = pairwise_sum(product.size(), [&](std::size_t l) {
    return product.value(l, power);
  });
  return sum * grid.weight();
}

double integrate_circle(const StageValues& values, const CircleGrid& grid,
                        int power, Quadrature mode) {
  if (power == 2) {
    const double norm = l2_norm(values, grid, mode);
    return norm * norm;
  }
  if (power != 1) throw std::invalid_argument("power must be 1 or 2");
  return l1_norm(values, grid);
}

std::complex<double> fourier_coefficient(const PartialProduct& product,
                                         std::int64_t n, const CircleGrid& grid) {
  if (product.size() != grid.size()) throw std::invalid_argument("grid size mismatch");
  const auto reach = static_cast<std::uint64_t>(product.density_degree) +
                     static_cast<std::uint64_t>(std::llabs(n));
  if (reach >= grid.size()) {
    std::ostringstream os;
    os << "coefficient " << n << " of a degree-" << product.density_degree
       << " density aliases on a grid of " << grid.size() << " points";
    throw GridTooCoarse(os.str());
  }
  const double re = pairwise_sum(product.size(), [&](std::size_t l) {
    return product.value(l, 2) * grid.power(-n, l).real();
  });
  const double im = pairwise_sum(product.size(), [&](std::size_t l) {
    return product.value(l, 2) * grid.power(-n, l).imag();
  });
  return {re * grid.weight(), im * grid.weight()};
}

}  // namespace riesz
