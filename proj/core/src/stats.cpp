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

#include "riesz/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "riesz/parallel.hpp"
#include "riesz/rng.hpp"

namespace riesz {

MeanEstimate estimate_mean(std::span<const double> samples) {
  MeanEstimate e;
  e.count = samples.size();
  if (samples.empty()) return e;
  const double n = static_cast<double>(samples.size());
  e.mean = pairwise_sum(samples.size(), [&](std::size_t i) { return samples[i]; }) / n;
  if (samples.size() > 1) {
    const double ss = pairwise_sum(samples.size(), [&](std::size_t i) {
      const double d = samples[i] - e.mean;
      return d * d;
    });
    e.stddev = std::sqrt(ss / (n - 1.0));
    e.stderr_ = e.stddev / std::sqrt(n);
  }
  return e;
}

double quantile(std::vector<double> samples, double q) {
  if (samples.empty()) throw std::invalid_argument("quantile of an empty sample");
  std::sort(samples.begin(), samples.end());
  const double pos = q * static_cast<double>(samples.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = std::min(lo + 1, samples.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return samples[lo] + frac * (samples[hi] - samples[lo]);
}

double ks_distance(std::vector<double> samples, const std::function<double(double)>& cdf) {
  if (samples.empty()) throw std::invalid_argument("KS distance of an empty sample");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max(d, static_cast<double>(i + 1) / n - f);
    d = std::max(d, f - static_cast<double>(i) / n);
  }
  return d;
}

double rayleigh_unit_cdf(double r) { return r <= 0.0 ? 0.0 : -std::expm1(-r * r); }

double rayleigh_unit_from_uniform(double u) { return std::sqrt(-std::log1p(-u)); }

double calibrate_ks_threshold(std::size_t n, int runs, double q,
                              std::uint64_t seed, int threads) {
  std::vector<double> stats(static_cast<std::size_t>(runs));
  parallel_for(stats.size(), threads, [&](std::size_t run) {
    const std::uint64_t run_seed = derive_seed(seed, Stream::kCalibration, run);
    std::vector<double> sample(n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto bits = random_bits(run_seed, Stream::kCalibration,
                                    static_cast<std::uint32_t>(i),
                                    static_cast<std::uint32_t>(i >> 32));
      sample[i] = rayleigh_unit_from_uniform(uniform_unit(bits));
    }
    stats[run] = ks_distance(std::move(sample), rayleigh_unit_cdf);
  });
  return quantile(std::move(stats), q);
}

double least_squares_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("slope needs two or more paired points");
  }
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxy / sxx;
}

}  // namespace riesz
