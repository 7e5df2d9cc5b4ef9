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

#include "riesz_cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "riesz/errors.hpp"
#include "riesz/experiments.hpp"
#include "riesz/polyeval.hpp"
#include "riesz/presets.hpp"
#include "riesz/report.hpp"
#include "riesz/riesz.hpp"
#include "riesz/spectrum.hpp"
#include "riesz/verify.hpp"

namespace riesz::cli {
namespace {

using Json = nlohmann::json;

std::string join(const std::vector<std::string>& items) {
  std::string s;
  for (const auto& i : items) s += (s.empty() ? "" : ", ") + i;
  return s;
}

std::string default_preset(const std::string& experiment) {
  if (experiment == "decay") return "decay";
  if (experiment == "clt" || experiment == "mean-abs") return "clt";
  if (experiment == "bound") return "bound-t9";
  if (experiment == "lindeberg") return "lindeberg";
  return "small-exhaustive";
}

std::size_t default_samples(const std::string& experiment) {
  if (experiment == "clt") return 100000;
  if (experiment == "lindeberg") return 200000;
  if (experiment == "decay") return 32;
  if (experiment == "fubini") return 16;
  if (experiment == "verify") return 256;
  return 64;
}

std::uint64_t parse_grid(const std::string& text) {
  if (text == "auto") return 0;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(text, &used);
    if (used != text.size() || v < 2) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw InvalidConfig("--grid expects an integer >= 2 or 'auto', got '" + text + "'");
  }
}

// Flat keys mirroring RunConfig plus the construction parameters.
void apply_file(const std::filesystem::path& path, RunConfig& cfg, bool& explicit_params) {
  std::ifstream in(path);
  if (!in) throw InvalidConfig("cannot read params file " + path.string());
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidConfig("params file " + path.string() + ": " + e.what());
  }
  if (!doc.is_object()) throw InvalidConfig("params file must hold a JSON object");
  static const std::vector<std::string> known = {"preset", "m",       "t",    "h1",    "support",
                                                 "stages", "seed",    "samples", "grid", "out",
                                                 "stage",  "eps",     "threads"};
  for (const auto& [key, _] : doc.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw InvalidConfig("unknown key '" + key + "' in params file (valid: " + join(known) + ")");
    }
  }
  try {
    if (doc.contains("preset")) {
      cfg.preset = doc["preset"].get<std::string>();
      cfg.params = preset(cfg.preset);
    }
    if (doc.contains("m")) {
      cfg.params.cuts = doc["m"].get<std::vector<std::int64_t>>();
      explicit_params = true;
    }
    if (doc.contains("t")) {
      cfg.params.spacers = doc["t"].get<std::vector<std::int64_t>>();
      explicit_params = true;
    }
    if (doc.contains("h1")) {
      cfg.params.initial_height = doc["h1"].get<std::int64_t>();
      explicit_params = true;
    }
    if (doc.contains("support")) {
      cfg.params.support = parse_support(doc["support"].get<std::string>());
      explicit_params = true;
    }
    if (doc.contains("stages")) {
      cfg.params.stages = doc["stages"].get<int>();
      explicit_params = true;
    } else if (doc.contains("m") && !doc.contains("preset")) {
      cfg.params.stages = static_cast<int>(cfg.params.cuts.size());
    }
    if (doc.contains("seed")) cfg.seed = doc["seed"].get<std::uint64_t>();
    if (doc.contains("samples")) cfg.samples = doc["samples"].get<std::size_t>();
    if (doc.contains("grid")) {
      cfg.grid = doc["grid"].is_string() ? parse_grid(doc["grid"].get<std::string>())
                                         : doc["grid"].get<std::uint64_t>();
    }
    if (doc.contains("out")) cfg.out = doc["out"].get<std::string>();
    if (doc.contains("stage")) cfg.stage = doc["stage"].get<int>();
    if (doc.contains("eps")) cfg.eps = doc["eps"].get<double>();
    if (doc.contains("threads")) cfg.threads = doc["threads"].get<int>();
  } catch (const Json::exception& e) {
    throw InvalidConfig("params file " + path.string() + ": " + e.what());
  } catch (const InvalidParams& e) {
    throw InvalidConfig(e.what());
  }
}

std::string format_entry(const ResultEntry& e) {
  std::ostringstream os;
  os.precision(10);
  os << e.label << " = " << e.value;
  if (e.stderr_ != 0.0) os << " +/- " << e.stderr_;
  return os.str();
}

int last_stage(const RunConfig& cfg) { return cfg.stage > 0 ? cfg.stage : cfg.params.stages; }
int stage_count(const RunConfig& cfg) { return cfg.stages > 0 ? cfg.stages : cfg.params.stages; }

ExperimentReport density_dump(const RunConfig& cfg, std::size_t& written) {
  const ConstructionParams& p = cfg.params;
  const int n = stage_count(cfg);
  if (n > p.stages) throw InvalidConfig("--stages exceeds the parameter stage count");
  const HeightSequence heights = build_heights(p);
  const OmegaSample omega = sample_omega(p, cfg.seed, n);
  const DensitySpectrum spectrum = density_spectrum(p, heights, omega, n);
  std::uint64_t size = cfg.grid;
  if (size == 0) {
    size = auto_grid_size(spectrum.degree());
    if (size > (std::uint64_t{1} << 22)) {
      std::ostringstream os;
      os << "an exact grid for R_" << n << "^2 needs " << size
         << " points (degree " << spectrum.degree() << "); lower --stages or pass --grid";
      throw GridTooCoarse(os.str());
    }
  }
  const CircleGrid grid(size);
  const PartialProduct product = partial_abs_product(p, heights, omega, n, grid);

  std::filesystem::create_directories(cfg.out);
  {
    std::ofstream csv(cfg.out / "density.csv");
    csv.precision(17);
    csv << "index,value\n";
    for (std::size_t l = 0; l < product.size(); ++l) csv << l << ',' << product.value(l, 2) << '\n';
  }
  constexpr std::int64_t kWindow = 32;
  {
    std::ofstream csv(cfg.out / "coefficients.csv");
    csv.precision(17);
    csv << "index,re,im\n";
    for (std::int64_t k = -kWindow; k <= kWindow; ++k) {
      const auto c = fourier_coefficient(product, k, grid);
      csv << k << ',' << c.real() << ',' << c.imag() << '\n';
    }
  }
  written = 2;

  ExperimentReport r;
  r.name = "density";
  r.params = p;
  r.seed = cfg.seed;
  r.grid_size = size;
  r.samples = 1;
  r.add("N", n);
  r.add("density_degree", static_cast<double>(spectrum.degree()));
  r.add("mass_grid", integrate_circle(product, grid, 2));
  r.add("mass_spectrum", spectrum.mass());
  r.add("integral_R_N", integrate_circle(product, grid, 1));
  return r;
}

ExperimentReport dispatch(const RunConfig& cfg, std::size_t& extra_files) {
  const RunOptions opts{cfg.threads};
  const std::size_t samples = cfg.samples != 0 ? cfg.samples : default_samples(cfg.experiment);
  const std::string& e = cfg.experiment;
  if (e == "mean-abs") return estimate_mean_abs(cfg.params, last_stage(cfg), samples, cfg.grid, cfg.seed, opts);
  if (e == "bound") return centered_comparison(cfg.params, last_stage(cfg), samples, cfg.grid, cfg.seed, opts);
  if (e == "clt") {
    CltOptions clt;
    clt.grid_size = cfg.grid;
    return clt_distribution_test(cfg.params, last_stage(cfg), samples, cfg.seed, opts, clt);
  }
  if (e == "lindeberg") {
    ExperimentReport ladder = lindeberg_ladder(cfg.params, last_stage(cfg), cfg.eps,
                                               {4, 16, 64, 256, 1024}, samples, cfg.seed, opts);
    const ExperimentReport at_m =
        lindeberg_ratio(cfg.params, last_stage(cfg), cfg.eps, samples, cfg.seed, opts);
    for (const auto& entry : at_m.results) {
      if (entry.label == "lindeberg_ratio" || entry.label == "m" || entry.label == "bounded_cutoff" ||
          entry.label == "total_variance" || entry.label == "total_variance_mc") {
        ladder.results.push_back(entry);
      }
    }
    return ladder;
  }
  if (e == "decay") return decay_experiment(cfg.params, stage_count(cfg), samples, cfg.grid, cfg.seed, opts);
  if (e == "fubini") return fubini_check(cfg.params, stage_count(cfg), samples, cfg.grid, cfg.seed, opts);
  if (e == "density") return density_dump(cfg, extra_files);
  if (e == "verify") {
    VerifyOptions vo;
    vo.oracle_samples = samples;
    return verify(cfg.params, cfg.seed, opts, vo);
  }
  throw InvalidConfig("unknown experiment '" + e + "' (valid: " + join(experiment_names()) + ")");
}

}  // namespace

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names = {"decay", "clt",     "mean-abs", "bound",
                                                 "fubini", "lindeberg", "density", "verify"};
  return names;
}

RunConfig parse_args(const std::vector<std::string>& args) {
  if (args.empty() || args[0] == "--help" || args[0] == "-h") {
    throw InvalidConfig("usage: riesz-lab <experiment> [options]; experiments: " +
                        join(experiment_names()));
  }
  RunConfig cfg;
  cfg.experiment = args[0];
  const auto& names = experiment_names();
  if (std::find(names.begin(), names.end(), cfg.experiment) == names.end()) {
    throw InvalidConfig("unknown experiment '" + cfg.experiment +
                        "' (valid: " + join(names) + ")");
  }

  CLI::App app{"riesz-lab " + cfg.experiment};
  std::string preset_flag, params_file, grid_flag, out_flag, support_flag;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> samples;
  std::optional<int> stage, stages, threads;
  std::optional<double> eps;
  app.add_option("--preset", preset_flag, "Parameter preset");
  app.add_option("--params", params_file, "JSON file with flat RunConfig / parameter keys");
  app.add_option("--seed", seed, "64-bit seed");
  app.add_option("--samples", samples, "Monte Carlo sample count");
  app.add_option("--grid", grid_flag, "Grid size or 'auto'");
  app.add_option("--out", out_flag, "Output directory");
  app.add_option("--stage", stage, "Stage j for single-stage experiments (default: last)");
  app.add_option("--stages", stages, "Number of stages N (default: all)");
  app.add_option("--eps", eps, "Lindeberg truncation level");
  app.add_option("--support", support_flag, "Override spacer support: symmetric | nonnegative");
  app.add_option("--threads", threads, "Worker threads (capped by RIESZ_LAB_THREADS)");

  std::vector<std::string> rest(args.rbegin(), args.rend() - 1);
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    throw InvalidConfig(std::string("argument error: ") + e.what());
  }

  bool explicit_params = false;
  cfg.preset = default_preset(cfg.experiment);
  cfg.params = preset(cfg.preset);
  if (!params_file.empty()) apply_file(params_file, cfg, explicit_params);
  if (!preset_flag.empty()) {
    try {
      cfg.preset = preset_flag;
      cfg.params = preset(preset_flag);
    } catch (const InvalidParams& e) {
      throw InvalidConfig(e.what());
    }
  } else if (explicit_params) {
    cfg.preset.clear();
  }
  if (!support_flag.empty()) {
    try {
      cfg.params.support = parse_support(support_flag);
    } catch (const InvalidParams& e) {
      throw InvalidConfig(e.what());
    }
  }
  if (seed) cfg.seed = *seed;
  if (samples) cfg.samples = *samples;
  if (!grid_flag.empty()) cfg.grid = parse_grid(grid_flag);
  if (!out_flag.empty()) cfg.out = out_flag;
  if (stage) cfg.stage = *stage;
  if (stages) cfg.stages = *stages;
  if (eps) cfg.eps = *eps;
  if (threads) cfg.threads = *threads;

  try {
    cfg.params.validate();
    build_heights(cfg.params);
  } catch (const std::exception& e) {
    throw InvalidConfig(std::string("invalid parameters: ") + e.what());
  }
  if (cfg.stage < 0 || cfg.stage > cfg.params.stages) throw InvalidConfig("--stage out of range");
  if (cfg.stages < 0 || cfg.stages > cfg.params.stages) throw InvalidConfig("--stages out of range");
  return cfg;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  ExperimentReport report;
  std::size_t extra = 0;
  try {
    report = dispatch(config, extra);
    write_report(report, config.out);
  } catch (const InvalidConfig& e) {
    err << "riesz-lab: " << e.what() << '\n';
    return kExitConfig;
  } catch (const GridTooCoarse& e) {
    err << "riesz-lab: grid too coarse: " << e.what() << '\n';
    return kExitConfig;
  } catch (const InvalidParams& e) {
    err << "riesz-lab: invalid parameters: " << e.what() << '\n';
    return kExitConfig;
  } catch (const OverflowError& e) {
    err << "riesz-lab: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    err << "riesz-lab: " << e.what() << '\n';
    return kExitConfig;
  }

  for (const auto& entry : report.results) out << report.name << ": " << format_entry(entry) << '\n';
  for (const auto& g : report.gates) {
    out << report.name << ": gate " << g.name << ' ' << (g.passed ? "PASS" : "FAIL");
    if (!g.detail.empty()) out << " (" << g.detail << ')';
    out << '\n';
  }
  out << report.name << ": wrote " << (config.out / "report.json").string();
  if (!report.series.empty() || extra > 0) {
    out << " and " << report.series.size() + extra << " CSV file(s)";
  }
  out << '\n';
  return report.passed() ? kExitOk : kExitGateFailed;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    cfg = parse_args(args);
  } catch (const InvalidConfig& e) {
    err << "riesz-lab: " << e.what() << '\n';
    return kExitConfig;
  }
  return run(cfg, out, err);
}

}  // namespace riesz::cli
