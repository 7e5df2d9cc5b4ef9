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

#include "riesz/report.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace riesz {
namespace {

using Json = nlohmann::ordered_json;

Json params_json(const ConstructionParams& p) {
  Json j;
  j["m"] = p.cuts;
  j["t"] = p.spacers;
  j["h1"] = p.initial_height;
  j["support"] = std::string(to_string(p.support));
  j["stages"] = p.stages;
  return j;
}

Json report_json(const ExperimentReport& r, bool with_timing) {
  Json j;
  j["schema"] = ExperimentReport::kSchema;
  j["experiment"] = r.name;
  j["params"] = params_json(r.params);
  j["seed"] = r.seed;
  j["grid_size"] = r.grid_size;
  j["samples"] = r.samples;
  Json results = Json::array();
  for (const auto& e : r.results) {
    results.push_back({{"label", e.label}, {"value", e.value}, {"stderr", e.stderr_}});
  }
  j["results"] = std::move(results);
  Json series = Json::object();
  for (const auto& s : r.series) {
    Json points = Json::array();
    for (const auto& p : s.points) {
      points.push_back({{"index", p.index}, {"value", p.value}, {"stderr", p.stderr_}});
    }
    series[s.name] = std::move(points);
  }
  j["series"] = std::move(series);
  Json gates = Json::array();
  for (const auto& g : r.gates) {
    gates.push_back({{"name", g.name}, {"passed", g.passed}, {"detail", g.detail}});
  }
  j["gates"] = std::move(gates);
  j["passed"] = r.passed();
  if (with_timing) j["timing"] = {{"wall_seconds", r.wall_seconds}};
  return j;
}

}  // namespace

const ResultEntry& ExperimentReport::result(std::string_view label) const {
  for (const auto& e : results) {
    if (e.label == label) return e;
  }
  throw std::out_of_range("no result labelled '" + std::string(label) + "'");
}

const Series& ExperimentReport::find_series(std::string_view series_name) const {
  for (const auto& s : series) {
    if (s.name == series_name) return s;
  }
  throw std::out_of_range("no series named '" + std::string(series_name) + "'");
}

bool ExperimentReport::passed() const {
  for (const auto& g : gates) {
    if (!g.passed) return false;
  }
  return true;
}

std::string to_json(const ExperimentReport& report, int indent) {
  return report_json(report, true).dump(indent);
}

std::string numeric_fingerprint(const ExperimentReport& report) {
  return report_json(report, false).dump();
}

std::string series_csv(const Series& series) {
  std::ostringstream os;
  os.precision(17);
  os << "index,value,stderr\n";
  for (const auto& p : series.points) {
    os << p.index << ',' << p.value << ',' << p.stderr_ << '\n';
  }
  return os.str();
}

void write_report(const ExperimentReport& report, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  {
    std::ofstream out(dir / "report.json");
    if (!out) throw std::runtime_error("cannot write " + (dir / "report.json").string());
    out << to_json(report) << '\n';
  }
  for (const auto& s : report.series) {
    std::ofstream out(dir / (s.name + ".csv"));
    if (!out) throw std::runtime_error("cannot write series " + s.name);
    out << series_csv(s);
  }
}

}  // namespace riesz
