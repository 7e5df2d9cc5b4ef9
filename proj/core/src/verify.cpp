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

#include "riesz/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "riesz/exhaustive.hpp"
#include "riesz/polyeval.hpp"
#include "riesz/riesz.hpp"
#include "riesz/rng.hpp"
#include "riesz/spectrum.hpp"

namespace riesz {
namespace {

constexpr double kMassTolerance = 1e-9;
constexpr double kFactorizationTolerance = 1e-12;

std::string sci(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

std::int64_t min_nonzero_gap(const ExponentSet& exps) {
  std::int64_t gap = INT64_MAX;
  for (std::size_t k = 1; k < exps.n.size(); ++k) gap = std::min(gap, exps.n[k] - exps.n[k - 1]);
  return gap;
}

}  // namespace

ExperimentReport verify(const ConstructionParams& params, std::uint64_t seed,
                        RunOptions options, VerifyOptions vo) {
  const auto start = std::chrono::steady_clock::now();
  const HeightSequence heights = build_heights(params);
  const DissociationReport dissociation = check_dissociation(params, heights);
  const int stages = params.stages;

  std::vector<OmegaSample> omegas;
  if (omega_count(params, stages) <= 64) {
    omegas = enumerate_omegas(params, stages);
  } else {
    for (std::uint64_t i = 0; i < 4; ++i) {
      omegas.push_back(sample_omega(params, derive_seed(seed, Stream::kReplicate, i), stages));
    }
  }

  ExperimentReport r;
  r.name = "verify";
  r.params = params;
  r.seed = seed;
  r.samples = omegas.size();
  r.add("dissociated", dissociation.dissociated ? 1.0 : 0.0);

  double spectrum_error = 0.0;
  double grid_error = 0.0;
  double route_gap = 0.0;
  double factorization_error = 0.0;
  double fourier_drift = 0.0;
  double fourier_route_gap = 0.0;
  int grid_checks = 0;
  int factorization_checks = 0;
  int fourier_checks = 0;
  std::vector<double> mass_sum(static_cast<std::size_t>(stages), 0.0);

  for (const auto& omega : omegas) {
    std::vector<ExponentSet> sets;
    for (int j = 1; j <= stages; ++j) sets.push_back(stage_exponents(params, heights, omega, j));
    for (int n = 1; n <= stages; ++n) {
      const DensitySpectrum spectrum(std::span<const ExponentSet>(sets.data(), static_cast<std::size_t>(n)));
      const double mass = spectrum.mass();
      mass_sum[static_cast<std::size_t>(n - 1)] += mass;
      spectrum_error = std::max(spectrum_error, std::abs(mass - 1.0));

      const std::uint64_t exact_size = auto_grid_size(spectrum.degree());
      if (exact_size <= vo.max_exact_grid) {
        const CircleGrid grid(exact_size);
        const PartialProduct product = partial_abs_product(params, heights, omega, n, grid);
        const double grid_mass = integrate_circle(product, grid, 2);
        grid_error = std::max(grid_error, std::abs(grid_mass - 1.0));
        route_gap = std::max(route_gap, std::abs(grid_mass - mass));
        ++grid_checks;

        for (std::int64_t k = -vo.fourier_window; k <= vo.fourier_window; ++k) {
          const auto exact = spectrum.coefficient(k);
          const auto quad = fourier_coefficient(product, k, grid);
          fourier_route_gap = std::max(fourier_route_gap, std::abs(quad - std::complex<double>(exact)));
        }
      }

      if (n < stages) {
        // Factorization R_{n+1}^2 = R_n^2 |P_{n+1}|^2 on an exact grid.
        const DensitySpectrum next(std::span<const ExponentSet>(sets.data(), static_cast<std::size_t>(n + 1)));
        const std::uint64_t next_size = auto_grid_size(next.degree());
        if (next_size <= vo.max_exact_grid) {
          const CircleGrid grid(next_size);
          const PartialProduct head = partial_abs_product(params, heights, omega, 1, n, grid);
          const PartialProduct tail = partial_abs_product(params, heights, omega, n + 1, n + 1, grid);
          const PartialProduct whole = partial_abs_product(params, heights, omega, 1, n + 1, grid);
          const double direct = integrate_circle(whole, grid, 2);
          const double factored = integrate_circle(combine(head, tail), grid, 2);
          factorization_error = std::max(factorization_error, std::abs(direct - factored));
          ++factorization_checks;
        }
        // mu_n(k) = mu_{n+1}(k) for |k| below the next stage's first gap minus deg(R_n^2).
        const std::int64_t window = std::min<std::int64_t>(
            vo.fourier_window, min_nonzero_gap(sets[static_cast<std::size_t>(n)]) - spectrum.degree() - 1);
        for (std::int64_t k = -window; k <= window; ++k) {
          fourier_drift = std::max(fourier_drift, std::abs(spectrum.coefficient(k) - next.coefficient(k)));
          ++fourier_checks;
        }
      }
    }
  }

  Series mass_series{"mass", {}};
  for (int n = 1; n <= stages; ++n) {
    mass_series.points.push_back(
        {n, mass_sum[static_cast<std::size_t>(n - 1)] / static_cast<double>(omegas.size()), 0.0});
  }
  r.series.push_back(std::move(mass_series));
  r.add("max_mass_error_spectrum", spectrum_error);
  r.add("max_mass_error_grid", grid_error);
  r.add("grid_mass_checks", grid_checks);
  r.add("max_mass_route_gap", route_gap);
  r.add("max_fourier_route_gap", fourier_route_gap);
  r.add("max_factorization_error", factorization_error);
  r.add("factorization_checks", factorization_checks);
  r.add("max_fourier_drift", fourier_drift);
  r.add("fourier_checks", fourier_checks);

  if (dissociation.dissociated) {
    r.gate("mass_spectrum", spectrum_error <= kMassTolerance, sci(spectrum_error));
    if (grid_checks > 0) r.gate("mass_grid", grid_error <= kMassTolerance, sci(grid_error));
    r.gate("fourier_stabilization", fourier_drift <= kFactorizationTolerance, sci(fourier_drift));
  }
  if (grid_checks > 0) {
    r.gate("mass_routes_agree", route_gap <= kMassTolerance, sci(route_gap));
    r.gate("fourier_routes_agree", fourier_route_gap <= kMassTolerance, sci(fourier_route_gap));
  }
  if (factorization_checks > 0) {
    r.gate("factorization", factorization_error <= kFactorizationTolerance, sci(factorization_error));
  }

  if (omega_count(params, stages) <= vo.enumeration_limit) {
    const HeightSequence h = heights;
    std::int64_t degree = 0;
    for (int j = 1; j <= stages; ++j) degree += (params.m(j) - 1) * (h[j] + params.t(j)) + params.t(j);
    const CircleGrid fine(std::min<std::uint64_t>(auto_grid_size(degree, 64, std::uint64_t{1} << 16), std::uint64_t{1} << 20));
    const double exact = exhaustive_mean_abs_product(params, stages, fine);
    const ExperimentReport mc =
        decay_experiment(params, stages, vo.oracle_samples, 0, seed, options);
    const ResultEntry& estimate = mc.result("I_N_max");
    r.add("oracle_exhaustive_I_N", exact);
    r.add("monte_carlo_I_N", estimate.value, estimate.stderr_);
    const double gap = std::abs(estimate.value - exact);
    r.gate("monte_carlo_matches_enumeration", gap <= 3.0 * estimate.stderr_ + 1e-6,
           sci(gap) + " vs " + sci(3.0 * estimate.stderr_));
  }

  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace riesz
