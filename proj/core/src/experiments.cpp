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

#include "riesz/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "riesz/errors.hpp"
#include "riesz/parallel.hpp"
#include "riesz/polyeval.hpp"
#include "riesz/riesz.hpp"
#include "riesz/rng.hpp"
#include "riesz/stats.hpp"

namespace riesz {
namespace {

const double kRayleighMean = std::sqrt(std::numbers::pi) / 2.0;

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void require_stage(const ConstructionParams& params, int j) {
  if (j < 1 || j > params.stages) {
    std::ostringstream os;
    os << "stage " << j << " outside [1, " << params.stages << "]";
    throw InvalidParams(os.str());
  }
}

void require_samples(std::size_t n) {
  if (n == 0) throw std::invalid_argument("sample count must be positive");
}

std::int64_t worst_stage_span(const ConstructionParams& params,
                              const HeightSequence& heights, int j) {
  return (params.m(j) - 1) * (heights[j] + params.t(j)) + params.t(j);
}

std::int64_t worst_density_degree(const ConstructionParams& params,
                                  const HeightSequence& heights, int n) {
  std::int64_t d = 0;
  for (int j = 1; j <= n; ++j) d += worst_stage_span(params, heights, j);
  return d;
}

// An unrotated grid only estimates integrals it resolves.
void require_estimable(std::uint64_t grid_size, std::int64_t degree) {
  const bool pow2 = (grid_size & (grid_size - 1)) == 0;
  if (!pow2 && grid_size <= static_cast<std::uint64_t>(degree)) {
    std::ostringstream os;
    os << "grid of " << grid_size << " points cannot be rotated and does not cover degree "
       << degree << "; use a power-of-two size";
    throw GridTooCoarse(os.str());
  }
}

ExperimentReport start_report(std::string name, const ConstructionParams& params,
                              std::uint64_t seed, std::uint64_t grid_size,
                              std::uint64_t samples) {
  ExperimentReport r;
  r.name = std::move(name);
  r.params = params;
  r.seed = seed;
  r.grid_size = grid_size;
  r.samples = samples;
  return r;
}

std::string describe(double value, double bound) {
  std::ostringstream os;
  os.precision(6);
  os << value << " vs " << bound;
  return os.str();
}

}  // namespace

CircleGrid replicate_grid(std::uint64_t size, std::uint64_t seed, std::uint64_t index) {
  if ((size & (size - 1)) != 0) return CircleGrid(size);
  const auto rotation =
      random_bits(seed, Stream::kGridRotation, static_cast<std::uint32_t>(index),
                  static_cast<std::uint32_t>(index >> 32));
  return CircleGrid(size, rotation);
}

std::uint64_t resolve_grid_size(std::uint64_t grid_size, std::int64_t span,
                                std::uint64_t cap) {
  if (grid_size != 0) return grid_size;
  return std::min(auto_grid_size(span), cap);
}

ExperimentReport estimate_mean_abs(const ConstructionParams& params, int j,
                                   std::size_t n_omega, std::uint64_t grid_size,
                                   std::uint64_t seed, RunOptions options) {
  const Stopwatch clock;
  require_stage(params, j);
  require_samples(n_omega);
  const HeightSequence heights = build_heights(params);
  const std::int64_t span = worst_stage_span(params, heights, j);
  const std::uint64_t size = resolve_grid_size(grid_size, span);
  require_estimable(size, span);

  std::vector<double> per_omega(n_omega);
  parallel_for(n_omega, resolve_threads(options.threads), [&](std::size_t s) {
    const auto spacers = sample_stage(params, derive_seed(seed, Stream::kReplicate, s), j);
    const auto grid = replicate_grid(size, seed, s);
    per_omega[s] = l1_norm(
        eval_stage_polynomial(stage_exponents(params, heights, j, spacers), grid), grid);
  });

  const MeanEstimate est = estimate_mean(per_omega);
  ExperimentReport r = start_report("mean-abs", params, seed, size, n_omega);
  r.add("stage", j);
  r.add("mean_abs", est.mean, est.stderr_);
  r.add("limit_sqrt_pi_over_2", kRayleighMean);
  r.add("deviation_from_limit", est.mean - kRayleighMean, est.stderr_);
  r.add("evaluation_points", static_cast<double>(n_omega) * static_cast<double>(size));
  r.wall_seconds = clock.seconds();
  return r;
}

ExperimentReport centered_comparison(const ConstructionParams& params, int j,
                                     std::size_t n_omega, std::uint64_t grid_size,
                                     std::uint64_t seed, RunOptions options) {
  const Stopwatch clock;
  require_stage(params, j);
  require_samples(n_omega);
  const HeightSequence heights = build_heights(params);
  const std::int64_t span = worst_stage_span(params, heights, j);
  const std::uint64_t size = resolve_grid_size(grid_size, span);
  require_estimable(size, span);

  std::vector<double> delta(n_omega);
  std::vector<double> mean_l1(n_omega);
  parallel_for(n_omega, resolve_threads(options.threads), [&](std::size_t s) {
    const auto spacers = sample_stage(params, derive_seed(seed, Stream::kReplicate, s), j);
    const auto grid = replicate_grid(size, seed, s);
    const StageValues p =
        eval_stage_polynomial(stage_exponents(params, heights, j, spacers), grid);
    const StageValues mean = eval_mean_polynomial(params, heights, j, grid);
    delta[s] = pairwise_sum(size, [&](std::size_t l) {
                 return std::abs(std::abs(p.values[l]) -
                                 std::abs(p.values[l] - mean.values[l]));
               }) *
               grid.weight();
    mean_l1[s] = l1_norm(mean, grid);
  });

  // Factor norms are deterministic; take them on an exact grid.
  const CircleGrid exact(std::min(auto_grid_size(span), CircleGrid::kMaxSize));
  const MeanFactors factors = mean_factors(params, heights, j, exact);
  const double geometric_l2 = l2_norm(factors.geometric, exact);
  const double kernel_l2 = l2_norm(factors.kernel, exact);
  const double bound = 1.0 / std::sqrt(static_cast<double>(params.support_size(j)));

  const MeanEstimate d = estimate_mean(delta);
  const MeanEstimate l1 = estimate_mean(mean_l1);
  ExperimentReport r = start_report("bound", params, seed, size, n_omega);
  r.add("stage", j);
  r.add("delta", d.mean, d.stderr_);
  r.add("bound", bound);
  r.add("mean_polynomial_l1", l1.mean, l1.stderr_);
  r.add("geometric_factor_l2", geometric_l2);
  r.add("kernel_factor_l2", kernel_l2);
  r.add("cauchy_schwarz_bound", geometric_l2 * kernel_l2);
  r.gate("delta_within_bound", d.mean <= bound + 3.0 * d.stderr_,
         describe(d.mean, bound + 3.0 * d.stderr_));
  r.wall_seconds = clock.seconds();
  return r;
}

ExperimentReport clt_distribution_test(const ConstructionParams& params, int j,
                                       std::size_t n_samples, std::uint64_t seed,
                                       RunOptions options, CltOptions clt) {
  const Stopwatch clock;
  require_stage(params, j);
  require_samples(n_samples);
  const HeightSequence heights = build_heights(params);
  const std::int64_t span = worst_stage_span(params, heights, j);
  const std::uint64_t size =
      clt.grid_size != 0 ? clt.grid_size : std::min(auto_grid_size(span), CircleGrid::kMaxSize);
  const CircleGrid grid(size);
  const int threads = resolve_threads(options.threads);

  const std::int64_t m = params.m(j);
  const std::int64_t step = heights[j] + params.t(j);
  const std::int64_t lo = params.support_min(j);
  const std::int64_t width = params.support_size(j);
  const double root_m = std::sqrt(static_cast<double>(m));

  std::vector<double> modulus(n_samples);
  parallel_for(n_samples, threads, [&](std::size_t i) {
    const auto spacers = sample_stage(params, derive_seed(seed, Stream::kReplicate, i), j);
    const auto bits = random_bits(seed, Stream::kCircleSample, static_cast<std::uint32_t>(i),
                                  static_cast<std::uint32_t>(i >> 32));
    const auto l = static_cast<std::uint64_t>(
        uniform_int(bits, 0, static_cast<std::int64_t>(size) - 1));
    std::complex<double> kernel = 0.0;
    for (std::int64_t s = 0; s < width; ++s) kernel += grid.power(lo + s, l);
    kernel /= static_cast<double>(width);
    std::complex<double> x = 0.0;
    for (std::int64_t k = 1; k < m; ++k) {
      const std::int64_t base = k * step;
      x += grid.power(base + spacers[static_cast<std::size_t>(k - 1)], l) -
           kernel * grid.power(base, l);
    }
    modulus[i] = std::abs(x) / root_m;
  });

  std::vector<double> squares(n_samples);
  for (std::size_t i = 0; i < n_samples; ++i) squares[i] = modulus[i] * modulus[i];
  const MeanEstimate mean = estimate_mean(modulus);
  const MeanEstimate second = estimate_mean(squares);
  const double ks = ks_distance(modulus, rayleigh_unit_cdf);
  const double threshold = calibrate_ks_threshold(
      n_samples, clt.calibration_runs, clt.calibration_quantile,
      derive_seed(seed, Stream::kCalibration, 0), threads);

  // Second-moment target 1 - ||E P_j||_2^2 two ways.
  const CircleGrid exact(std::min(auto_grid_size(span), CircleGrid::kMaxSize));
  const double mean_norm = l2_norm(eval_mean_polynomial(params, heights, j, exact), exact);
  const double closed_form = (static_cast<double>(m - 1) / static_cast<double>(m)) *
                             (1.0 - 1.0 / static_cast<double>(width));

  ExperimentReport r = start_report("clt", params, seed, size, n_samples);
  r.add("stage", j);
  r.add("ks_distance", ks);
  r.add("ks_threshold", threshold);
  r.add("mean_modulus", mean.mean, mean.stderr_);
  r.add("target_mean", kRayleighMean);
  r.add("second_moment", second.mean, second.stderr_);
  r.add("target_second_moment", 1.0 - mean_norm * mean_norm);
  r.add("target_second_moment_closed_form", closed_form);
  r.gate("ks_below_calibrated_threshold", ks <= threshold, describe(ks, threshold));
  r.wall_seconds = clock.seconds();
  return r;
}

namespace {

struct LindebergDraws {
  std::vector<double> deviation;  // |z^omega - K(z)| per sample
  std::int64_t support = 0;
};

LindebergDraws draw_lindeberg(const ConstructionParams& params, int j,
                              std::size_t n_samples, std::uint64_t seed, int threads) {
  LindebergDraws d;
  d.support = params.support_size(j);
  d.deviation.resize(n_samples);
  const std::int64_t lo = params.support_min(j);
  parallel_for(n_samples, threads, [&](std::size_t i) {
    const auto a = static_cast<std::uint32_t>(i);
    const auto b = static_cast<std::uint32_t>(i >> 32);
    const std::int64_t omega =
        uniform_int(random_bits(seed, Stream::kSpacers, a, b), lo, params.support_max(j));
    const std::uint64_t turns = random_bits(seed, Stream::kCircleSample, a, b);
    std::complex<double> kernel = 0.0;
    for (std::int64_t s = 0; s < d.support; ++s) {
      kernel += unit_from_turns(static_cast<std::uint64_t>(lo + s) * turns);
    }
    kernel /= static_cast<double>(d.support);
    d.deviation[i] = std::abs(unit_from_turns(static_cast<std::uint64_t>(omega) * turns) - kernel);
  });
  return d;
}

struct LindebergValue {
  MeanEstimate ratio;
  double variance = 0.0;  // s^2
  bool cutoff = false;    // 2 / sqrt(m) <= eps s: indicator vanishes identically
};

// |Y_k| = |z^omega - K(z)| / sqrt(m) for every k >= 1, so
// L = E[D^2 1{D > eps s sqrt(m)}] / (1 - 1/|support|).
LindebergValue lindeberg_at(const LindebergDraws& d, std::int64_t m, double eps) {
  LindebergValue v;
  const double keep = 1.0 - 1.0 / static_cast<double>(d.support);
  v.variance = (static_cast<double>(m - 1) / static_cast<double>(m)) * keep;
  const double s = std::sqrt(v.variance);
  const double cut = eps * s * std::sqrt(static_cast<double>(m));
  v.cutoff = 2.0 <= cut;
  std::vector<double> terms(d.deviation.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const double dev = d.deviation[i];
    terms[i] = dev > cut ? dev * dev / keep : 0.0;
  }
  v.ratio = estimate_mean(terms);
  return v;
}

}  // namespace

ExperimentReport lindeberg_ratio(const ConstructionParams& params, int j, double eps,
                                 std::size_t n_samples, std::uint64_t seed,
                                 RunOptions options) {
  const Stopwatch clock;
  require_stage(params, j);
  require_samples(n_samples);
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  const LindebergDraws draws =
      draw_lindeberg(params, j, n_samples, seed, resolve_threads(options.threads));
  const LindebergValue v = lindeberg_at(draws, params.m(j), eps);

  std::vector<double> sq(draws.deviation.size());
  for (std::size_t i = 0; i < sq.size(); ++i) sq[i] = draws.deviation[i] * draws.deviation[i];
  const MeanEstimate sq_mean = estimate_mean(sq);
  const double scale = static_cast<double>(params.m(j) - 1) / static_cast<double>(params.m(j));

  ExperimentReport r = start_report("lindeberg", params, seed, 0, n_samples);
  r.add("stage", j);
  r.add("eps", eps);
  r.add("m", static_cast<double>(params.m(j)));
  r.add("lindeberg_ratio", v.ratio.mean, v.ratio.stderr_);
  r.add("total_variance", v.variance);
  r.add("total_variance_mc", scale * sq_mean.mean, scale * sq_mean.stderr_);
  r.add("bounded_cutoff", v.cutoff ? 1.0 : 0.0);
  r.wall_seconds = clock.seconds();
  return r;
}

ExperimentReport lindeberg_ladder(const ConstructionParams& params, int j, double eps,
                                  const std::vector<std::int64_t>& ladder,
                                  std::size_t n_samples, std::uint64_t seed,
                                  RunOptions options) {
  const Stopwatch clock;
  require_stage(params, j);
  require_samples(n_samples);
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  if (ladder.size() < 2) throw std::invalid_argument("ladder needs at least two rungs");
  const LindebergDraws draws =
      draw_lindeberg(params, j, n_samples, seed, resolve_threads(options.threads));

  ExperimentReport r = start_report("lindeberg", params, seed, 0, n_samples);
  r.add("stage", j);
  r.add("eps", eps);
  Series series{"lindeberg", {}};
  bool monotone = true;
  double previous = 0.0;
  for (std::size_t i = 0; i < ladder.size(); ++i) {
    if (ladder[i] < 2 || (i > 0 && ladder[i] <= ladder[i - 1])) {
      throw std::invalid_argument("ladder must be increasing with m >= 2");
    }
    const LindebergValue v = lindeberg_at(draws, ladder[i], eps);
    series.points.push_back({ladder[i], v.ratio.mean, v.ratio.stderr_});
    if (i > 0 && v.ratio.mean > previous) monotone = false;
    previous = v.ratio.mean;
  }
  const double first = series.points.front().value;
  const double last = series.points.back().value;
  r.add("first_rung", first, series.points.front().stderr_);
  r.add("last_rung", last, series.points.back().stderr_);
  r.series.push_back(std::move(series));
  r.gate("non_increasing_in_m", monotone);
  r.gate("decreases_toward_zero", last < first || (first == 0.0 && last == 0.0),
         describe(last, first));
  r.wall_seconds = clock.seconds();
  return r;
}

ExperimentReport decay_experiment(const ConstructionParams& params, int n_max,
                                  std::size_t n_omega, std::uint64_t grid_size,
                                  std::uint64_t seed, RunOptions options) {
  const Stopwatch clock;
  if (n_max < 1 || n_max > params.stages) {
    throw InvalidParams("decay needs 1 <= N_max <= stages");
  }
  require_samples(n_omega);
  const HeightSequence heights = build_heights(params);
  const std::int64_t degree = worst_density_degree(params, heights, n_max);
  const std::uint64_t size = resolve_grid_size(grid_size, degree);
  require_estimable(size, degree);

  const auto levels = static_cast<std::size_t>(n_max);
  // integral[N-1][s] = int R_N on replicate s; factor[j-1][s] = int |P_j|.
  std::vector<std::vector<double>> integral(levels, std::vector<double>(n_omega));
  std::vector<std::vector<double>> factor(levels, std::vector<double>(n_omega));
  parallel_for(n_omega, resolve_threads(options.threads), [&](std::size_t s) {
    const OmegaSample omega =
        sample_omega(params, derive_seed(seed, Stream::kReplicate, s), n_max);
    const auto grid = replicate_grid(size, seed, s);
    PartialProduct product = empty_product(grid);
    for (int j = 1; j <= n_max; ++j) {
      const StageValues p = eval_stage_polynomial(stage_exponents(params, heights, omega, j), grid);
      factor[static_cast<std::size_t>(j - 1)][s] = l1_norm(p, grid);
      multiply_abs(product, p);
      integral[static_cast<std::size_t>(j - 1)][s] =
          integrate_circle(product, grid, 1, Quadrature::kEstimate);
    }
  });

  ExperimentReport r = start_report("decay", params, seed, size, n_omega);
  Series curve{"I", {{0, 1.0, 0.0}}};
  Series ratios{"ratio", {}};
  Series factors{"stage_factor", {}};
  std::vector<double> xs{0.0};
  std::vector<double> ys{0.0};
  std::vector<MeanEstimate> est(levels);
  for (std::size_t n = 0; n < levels; ++n) {
    est[n] = estimate_mean(integral[n]);
    curve.points.push_back({static_cast<std::int64_t>(n + 1), est[n].mean, est[n].stderr_});
    const MeanEstimate f = estimate_mean(factor[n]);
    factors.points.push_back({static_cast<std::int64_t>(n + 1), f.mean, f.stderr_});
    xs.push_back(static_cast<double>(n + 1));
    ys.push_back(std::log(est[n].mean));
  }
  bool decreasing = true;
  for (std::size_t n = 1; n < levels; ++n) {
    // Ratio of means with a first-order (delta-method) standard error from
    // the paired replicates.
    std::vector<double> linear(n_omega);
    const double ratio = est[n].mean / est[n - 1].mean;
    for (std::size_t s = 0; s < n_omega; ++s) {
      linear[s] = (integral[n][s] - ratio * integral[n - 1][s]) / est[n - 1].mean;
    }
    ratios.points.push_back(
        {static_cast<std::int64_t>(n + 1), ratio, estimate_mean(linear).stderr_});
    if (!(est[n].mean < est[n - 1].mean)) decreasing = false;
  }
  r.add("N_max", n_max);
  r.add("I_N_max", est.back().mean, est.back().stderr_);
  if (levels >= 1) {
    r.add("log_slope", least_squares_slope(xs, ys));
  }
  r.add("I_N_max_q05", quantile(integral.back(), 0.05));
  r.add("I_N_max_q50", quantile(integral.back(), 0.50));
  r.add("I_N_max_q95", quantile(integral.back(), 0.95));
  r.series.push_back(std::move(curve));
  r.series.push_back(std::move(ratios));
  r.series.push_back(std::move(factors));
  r.gate("strictly_decreasing_beyond_N1", decreasing);
  r.wall_seconds = clock.seconds();
  return r;
}

ExperimentReport fubini_check(const ConstructionParams& params, int n,
                              std::size_t n_omega, std::uint64_t grid_size,
                              std::uint64_t seed, RunOptions options,
                              std::size_t per_stage_samples) {
  const Stopwatch clock;
  if (n < 1 || n > params.stages) throw InvalidParams("fubini needs 1 <= N <= stages");
  require_samples(n_omega);
  require_samples(per_stage_samples);
  const HeightSequence heights = build_heights(params);
  const std::int64_t degree = worst_density_degree(params, heights, n);
  const std::uint64_t size = resolve_grid_size(grid_size, degree, kMonteCarloGridCap / 4);
  require_estimable(size, degree);
  const int threads = resolve_threads(options.threads);

  // Left side: one joint omega per replicate.
  std::vector<double> lhs(n_omega);
  parallel_for(n_omega, threads, [&](std::size_t s) {
    const OmegaSample omega = sample_omega(params, derive_seed(seed, Stream::kReplicate, s), n);
    const auto grid = replicate_grid(size, seed, s);
    lhs[s] = integrate_circle(partial_abs_product(params, heights, omega, n, grid), grid, 1,
                              Quadrature::kEstimate);
  });
  const MeanEstimate left = estimate_mean(lhs);

  ExperimentReport r = start_report("fubini", params, seed, size, n_omega);
  r.add("N", n);
  r.add("lhs", left.mean, left.stderr_);
  if (n == 1) {
    // A single factor: both sides are the same integral.
    r.add("rhs", left.mean, left.stderr_);
    r.add("difference", 0.0, left.stderr_);
    r.gate("sides_agree", true, "single factor");
    r.wall_seconds = clock.seconds();
    return r;
  }

  // Right side: per grid point, the product of per-stage means over
  // independent omega batches.
  const std::uint64_t rhs_seed = derive_seed(seed, Stream::kFubiniStage, 0);
  std::vector<double> rhs(n_omega);
  parallel_for(n_omega, threads, [&](std::size_t b) {
    const auto grid = replicate_grid(size, rhs_seed, b);
    std::vector<double> product(size, 1.0);
    std::vector<double> stage_mean(size);
    for (int j = 1; j <= n; ++j) {
      std::fill(stage_mean.begin(), stage_mean.end(), 0.0);
      const std::uint64_t stage_seed =
          derive_seed(seed, Stream::kFubiniStage, static_cast<std::uint64_t>(j));
      for (std::size_t i = 0; i < per_stage_samples; ++i) {
        const auto spacers = sample_stage(
            params, derive_seed(stage_seed, Stream::kReplicate, b * per_stage_samples + i), j);
        const StageValues p =
            eval_stage_polynomial(stage_exponents(params, heights, j, spacers), grid);
        for (std::size_t l = 0; l < size; ++l) stage_mean[l] += std::abs(p.values[l]);
      }
      for (std::size_t l = 0; l < size; ++l) {
        product[l] *= stage_mean[l] / static_cast<double>(per_stage_samples);
      }
    }
    rhs[b] = pairwise_sum(size, [&](std::size_t l) { return product[l]; }) * grid.weight();
  });
  const MeanEstimate right = estimate_mean(rhs);
  const double combined = std::hypot(left.stderr_, right.stderr_);
  const double diff = left.mean - right.mean;
  r.add("rhs", right.mean, right.stderr_);
  r.add("difference", diff, combined);
  r.add("per_stage_samples", static_cast<double>(per_stage_samples));
  r.gate("sides_agree", std::abs(diff) <= 3.0 * combined + 1e-12,
         describe(std::abs(diff), 3.0 * combined));
  r.wall_seconds = clock.seconds();
  return r;
}

}  // namespace riesz
