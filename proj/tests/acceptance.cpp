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

// Acceptance suite: one PASS/FAIL line per criterion, tolerances pinned
// below. Exit status is nonzero when a criterion fails that is not listed in
// kExpectedFailures; --strict counts every failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "riesz/construction.hpp"
#include "riesz/experiments.hpp"
#include "riesz/polyeval.hpp"
#include "riesz/presets.hpp"
#include "riesz/report.hpp"
#include "riesz/riesz.hpp"
#include "riesz/rng.hpp"
#include "riesz/spectrum.hpp"
#include "riesz/verify.hpp"

namespace {

using namespace riesz;
using Clock = std::chrono::steady_clock;

// Tolerances.
constexpr double kSigmas = 3.0;
constexpr double kMeanAbsMaxStderr = 0.01;
constexpr double kMeanAbsMinPoints = 1e6;
constexpr double kMeanAbsMaxSeconds = 60.0;
constexpr double kMassTolerance = 1e-9;
constexpr double kDecayFinalMax = 0.60;
constexpr double kRatioLow = 0.80;
constexpr double kRatioHigh = 0.95;
constexpr double kOracleTolerance = 1e-12;
constexpr double kOracleSuiteMaxSeconds = 120.0;
constexpr double kLooseKs = 0.02;
constexpr std::size_t kFine = std::size_t{1} << 16;

// Fixed before any run: the default seed of the command-line tool.
constexpr std::uint64_t kSeed = 1;

// Criteria known to fail at desk scale; see README.
const std::set<int> kExpectedFailures = {1, 7};

const double kSqrtPiOver2 = std::sqrt(std::numbers::pi) / 2.0;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void check(bool ok, std::string note) {
    pass = pass && ok;
    notes.push_back((ok ? "" : "!") + std::move(note));
  }
};

bool within(const ResultEntry& e, double want) {
  return std::abs(e.value - want) <= kSigmas * e.stderr_;
}

Outcome criterion_clt_mean() {
  Outcome o;
  const auto start = Clock::now();
  const auto r = estimate_mean_abs(preset("clt"), 1, 64, 0, kSeed);
  const double secs = seconds_since(start);
  const auto& e = r.result("mean_abs");
  o.check(within(e, kSqrtPiOver2),
          fmt("mean %.6f +/- %.2e vs %.6f (%.1f sigma)", e.value, e.stderr_, kSqrtPiOver2,
              (e.value - kSqrtPiOver2) / e.stderr_));
  o.check(e.stderr_ <= kMeanAbsMaxStderr, fmt("stderr %.2e", e.stderr_));
  o.check(r.result("evaluation_points").value >= kMeanAbsMinPoints,
          fmt("%.3g points", r.result("evaluation_points").value));
  o.check(secs <= kMeanAbsMaxSeconds, fmt("%.1f s", secs));
  return o;
}

Outcome criterion_centered_bound() {
  Outcome o;
  for (const char* name : {"bound-t9", "bound-t99", "bound-t9-nn", "bound-t99-nn"}) {
    const auto r = centered_comparison(preset(name), 1, 64, 0, kSeed);
    const auto& d = r.result("delta");
    const double bound = r.result("bound").value;
    o.check(d.value <= bound + kSigmas * d.stderr_,
            fmt("%s delta %.4f +/- %.1e <= %.4f", name, d.value, d.stderr_, bound));
  }
  return o;
}

Outcome criterion_mass() {
  Outcome o;
  for (const char* name : {"small-exhaustive", "decay"}) {
    const auto p = preset(name);
    if (!check_dissociation(p).dissociated) {
      o.check(false, std::string(name) + " not dissociated");
      continue;
    }
    const auto h = build_heights(p);
    double worst = 0.0;
    int checks = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto omega = sample_omega(p, derive_seed(kSeed, Stream::kReplicate, seed), p.stages);
      for (int n = 1; n <= p.stages; ++n) {
        const auto spec = density_spectrum(p, h, omega, n);
        worst = std::max(worst, std::abs(spec.mass() - 1.0));
        ++checks;
        const std::uint64_t size = auto_grid_size(spec.degree(), 2);
        if (size <= (std::uint64_t{1} << 22)) {
          const CircleGrid g(size);
          const double grid_mass = integrate_circle(partial_abs_product(p, h, omega, n, g), g, 2);
          worst = std::max(worst, std::abs(grid_mass - 1.0));
          ++checks;
        }
      }
    }
    o.check(worst <= kMassTolerance, fmt("%s: %d checks, max |mass - 1| = %.1e", name, checks, worst));
  }
  return o;
}

Outcome criterion_decay() {
  Outcome o;
  const auto p = preset("decay");
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto r = decay_experiment(p, p.stages, 32, 0, seed);
    const auto& curve = r.find_series("I").points;
    bool decreasing = true;
    double lo = 1.0, hi = 0.0;
    for (std::size_t n = 2; n < curve.size(); ++n) {
      decreasing = decreasing && curve[n].value < curve[n - 1].value;
      const double ratio = curve[n].value / curve[n - 1].value;
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    const double last = curve.back().value;
    o.check(decreasing && last <= kDecayFinalMax && lo >= kRatioLow && hi <= kRatioHigh,
            fmt("seed %llu: I_5 %.4f, ratios [%.4f, %.4f]%s", static_cast<unsigned long long>(seed),
                last, lo, hi, decreasing ? "" : ", not decreasing"));
  }
  return o;
}

Outcome criterion_fubini() {
  Outcome o;
  const auto small = preset("small-exhaustive");
  const double exact = oracle::exhaustive_mean_abs({{2, 2}, {1, 1}, 8, true}, 2, kFine);
  const auto r = fubini_check(small, 2, 64, 0, kSeed);
  const auto& diff = r.result("difference");
  o.check(std::abs(diff.value) <= kSigmas * diff.stderr_,
          fmt("small-exhaustive diff %.2e +/- %.1e", diff.value, diff.stderr_));
  o.check(within(r.result("lhs"), exact), fmt("lhs %.5f vs oracle %.5f", r.result("lhs").value, exact));
  o.check(within(r.result("rhs"), exact), fmt("rhs %.5f vs oracle %.5f", r.result("rhs").value, exact));
  const auto d = fubini_check(preset("decay"), 5, 16, 0, kSeed);
  const auto& dd = d.result("difference");
  o.check(std::abs(dd.value) <= kSigmas * dd.stderr_,
          fmt("decay diff %.2e +/- %.1e", dd.value, dd.stderr_));
  return o;
}

// Every worked example with a brute-force reference.
Outcome criterion_oracles() {
  Outcome o;
  const auto start = Clock::now();
  int count = 0;
  auto check = [&](bool ok, std::string what) {
    ++count;
    if (!ok) o.check(false, std::move(what));
  };

  {
    ConstructionParams p;
    p.cuts = {2, 2, 2};
    p.spacers = {1, 1, 1};
    p.initial_height = 8;
    p.stages = 3;
    // Hand chain: gaps 8, 18, 38 against lower degrees 0, 10, 30.
    const auto h = oracle::heights({{2, 2, 2}, {1, 1, 1}, 8, true});
    bool chain = true;
    std::int64_t lower = 0;
    for (std::size_t j = 0; j < 3; ++j) {
      chain = chain && h[j] > lower;
      lower += h[j] + 2;
    }
    check(check_dissociation(p).dissociated == chain && chain, "dissociation chain");
  }
  {
    const std::vector<std::int64_t> n{0, 7, 15};
    const CircleGrid g(16);
    const auto v = eval_stage_polynomial({1, n}, g);
    check(std::abs(v.values[2] - oracle::poly_on_grid(n, 2, 16)) <= kOracleTolerance,
          "direct summation at l=2");
  }
  const auto small = preset("small-exhaustive");
  const auto hs = build_heights(small);
  const oracle::Params op{{2, 2}, {1, 1}, 8, true};
  {
    const CircleGrid g(128);
    for (const auto& w1 : oracle::stage_space(op, 0)) {
      for (const auto& w2 : oracle::stage_space(op, 1)) {
        const OmegaSample omega{{w1, w2}, 0};
        const auto r = partial_abs_product(small, hs, omega, 2, g);
        const auto n1 = oracle::exponents(op, 0, w1);
        const auto n2 = oracle::exponents(op, 1, w2);
        double worst = 0.0;
        for (std::uint64_t l = 0; l < g.size(); ++l) {
          const double want =
              std::abs(oracle::poly_on_grid(n1, l, 128)) * std::abs(oracle::poly_on_grid(n2, l, 128));
          if (want > 1e-9) worst = std::max(worst, std::abs(r.value(l) / want - 1.0));
        }
        check(worst <= kOracleTolerance, "direct product of moduli");
        const auto dense = oracle::density_coefficients({n1, n2});
        check(std::abs(integrate_circle(r, g, 2) - dense.at(0)) <= kMassTolerance &&
                  std::abs(dense.at(0) - 1.0) <= kMassTolerance,
              "coefficient-space mass");
        const auto r1 = partial_abs_product(small, hs, omega, 1, g);
        // h_2 > 2|k| + deg R_1^2 keeps coefficient k fixed from N=1 to N=2.
        for (std::int64_t k = 0; hs[2] > 2 * k + r1.density_degree; ++k) {
          check(std::abs(fourier_coefficient(r1, k, g) - fourier_coefficient(r, k, g)) <= kOracleTolerance,
                "Fourier stabilization");
          const auto it = dense.find(k);
          check(std::abs(fourier_coefficient(r, k, g).real() - (it == dense.end() ? 0.0 : it->second)) <=
                    kOracleTolerance,
                "coefficient-space Fourier");
        }
      }
    }
  }
  ConstructionParams two;
  two.cuts = {2};
  two.spacers = {1};
  two.initial_height = 3;
  two.stages = 1;
  {
    const double want = oracle::exhaustive_mean_abs({{2}, {1}, 3, true}, 1, kFine);
    const auto& e = estimate_mean_abs(two, 1, 256, 0, kSeed).result("mean_abs");
    check(within(e, want) || std::abs(e.value - want) < 1e-9, "mean-abs vs exhaustive oracle");
    const double delta = oracle::exhaustive_centered_delta({{2}, {1}, 3, true}, 0, kFine);
    const auto& d = centered_comparison(two, 1, 256, 0, kSeed).result("delta");
    check(within(d, delta), "centered delta vs exhaustive oracle");
  }
  {
    // 1 - ||E P||^2 from the mean's coefficients, built per coordinate.
    const auto p = preset("clt");
    const auto h = build_heights(p);
    const double m = static_cast<double>(p.m(1));
    const double width = static_cast<double>(p.support_size(1));
    std::map<std::int64_t, double> coeff{{0, 1.0 / std::sqrt(m)}};
    for (std::int64_t k = 1; k < p.m(1); ++k) {
      for (std::int64_t s = p.support_min(1); s <= p.support_max(1); ++s) {
        coeff[k * (h[1] + p.t(1)) + s] += 1.0 / (std::sqrt(m) * width);
      }
    }
    double norm2 = 0.0;
    for (const auto& [f, c] : coeff) norm2 += c * c;
    const auto r = clt_distribution_test(p, 1, 100000, kSeed);
    check(std::abs(r.result("target_second_moment").value - (1.0 - norm2)) <= kOracleTolerance,
          "clt second-moment target");
    check(r.result("ks_distance").value <= kLooseKs, "clt KS <= 0.02");
  }
  {
    const double want = oracle::lindeberg({{4}, {1}, 2, true}, 0, 0.1, kFine);
    check(within(lindeberg_ratio(preset("lindeberg"), 1, 0.1, 200000, kSeed).result("lindeberg_ratio"), want),
          "lindeberg vs exhaustive oracle");
  }
  {
    const double want = oracle::exhaustive_mean_abs(op, 2, kFine);
    const auto& pt = decay_experiment(small, 2, 256, 0, kSeed).find_series("I").points[2];
    check(std::abs(pt.value - want) <= kSigmas * pt.stderr_, "decay I_2 vs 9-case oracle");
    const auto f = fubini_check(small, 2, 256, 0, kSeed);
    check(within(f.result("lhs"), want) && within(f.result("rhs"), want), "fubini vs 9-case oracle");
  }
  const double secs = seconds_since(start);
  o.check(secs <= kOracleSuiteMaxSeconds, fmt("%d oracle checks in %.1f s", count, secs));
  return o;
}

Outcome criterion_ks() {
  Outcome o;
  const auto r = clt_distribution_test(preset("clt"), 1, 100000, kSeed);
  o.check(r.result("ks_distance").value <= r.result("ks_threshold").value,
          fmt("KS %.5f vs calibrated %.5f", r.result("ks_distance").value, r.result("ks_threshold").value));
  return o;
}

Outcome criterion_determinism() {
  Outcome o;
  const auto small = preset("small-exhaustive");
  const std::vector<std::pair<const char*, std::function<ExperimentReport(int)>>> runs = {
      {"mean-abs", [](int t) { return estimate_mean_abs(preset("clt"), 1, 16, 0, kSeed, {t}); }},
      {"bound", [](int t) { return centered_comparison(preset("bound-t9"), 1, 16, 0, kSeed, {t}); }},
      {"clt", [](int t) { return clt_distribution_test(preset("clt"), 1, 20000, kSeed, {t}); }},
      {"lindeberg",
       [](int t) { return lindeberg_ladder(preset("lindeberg"), 1, 0.1, {4, 16, 64, 256, 1024}, 20000, kSeed, {t}); }},
      {"decay", [](int t) { return decay_experiment(preset("decay"), 5, 4, 0, kSeed, {t}); }},
      {"fubini", [&](int t) { return fubini_check(small, 2, 32, 0, kSeed, {t}); }},
      {"verify", [&](int t) { return verify(small, kSeed, {t}); }},
  };
  for (const auto& [name, run] : runs) {
    const std::string one = numeric_fingerprint(run(1));
    const bool same = one == numeric_fingerprint(run(4)) && one == numeric_fingerprint(run(8));
    o.check(same, std::string(name) + (same ? " identical" : " differs"));
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const bool strict = argc > 1 && std::strcmp(argv[1], "--strict") == 0;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"CLT mean", criterion_clt_mean},
      {"centered bound", criterion_centered_bound},
      {"mass invariant", criterion_mass},
      {"decay", criterion_decay},
      {"Fubini/independence", criterion_fubini},
      {"oracle equivalence", criterion_oracles},
      {"distributional CLT", criterion_ks},
      {"determinism", criterion_determinism},
  };
  int unexpected = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    const auto start = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    std::string notes;
    for (const auto& n : o.notes) notes += (notes.empty() ? "" : "; ") + n;
    const bool expected = kExpectedFailures.count(id) > 0;
    std::printf("%s criterion %d %s: %s [%.1f s]%s\n", o.pass ? "PASS" : "FAIL", id, criteria[i].first,
                notes.c_str(), seconds_since(start), !o.pass && expected ? " (expected failure)" : "");
    std::fflush(stdout);
    if (!o.pass && (strict || !expected)) ++unexpected;
  }
  return unexpected == 0 ? 0 : 1;
}
