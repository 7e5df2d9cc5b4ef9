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
#include <functional>
#include <span>
#include <vector>

namespace riesz {

struct MeanEstimate {
  double mean = 0.0;
  double stderr_ = 0.0;  // standard error of the mean
  double stddev = 0.0;   // sample standard deviation
  std::size_t count = 0;
};

// Mean and standard error with pairwise sums, so the result depends only on
// the sample order.
MeanEstimate estimate_mean(std::span<const double> samples);

// Empirical q-quantile (linear interpolation between order statistics).
double quantile(std::vector<double> samples, double q);

// One-sample Kolmogorov-Smirnov statistic sup |F_n - F|.
double ks_distance(std::vector<double> samples, const std::function<double(double)>& cdf);

// Modulus law of a standard complex normal with E|X|^2 = 1:
// Rayleigh with scale 1/sqrt(2), F(r) = 1 - exp(-r^2).
double rayleigh_unit_cdf(double r);

// Draws from the same law by inversion.
double rayleigh_unit_from_uniform(double u);

// q-quantile of the KS distance between `runs` independent exact Rayleigh
// samples of size n and the Rayleigh law.
double calibrate_ks_threshold(std::size_t n, int runs, double q,
                              std::uint64_t seed, int threads);

// Least-squares slope of y against x.
double least_squares_slope(std::span<const double> x, std::span<const double> y);

}  // namespace riesz
