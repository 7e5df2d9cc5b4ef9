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
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "riesz/construction.hpp"

namespace riesz {

struct ResultEntry {
  std::string label;
  double value = 0.0;
  double stderr_ = 0.0;  // 0 for deterministic quantities
};

struct SeriesPoint {
  std::int64_t index = 0;
  double value = 0.0;
  double stderr_ = 0.0;
};

struct Series {
  std::string name;
  std::vector<SeriesPoint> points;
};

// A statistical assertion evaluated by an experiment.
struct Gate {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct ExperimentReport {
  static constexpr int kSchema = 1;

  std::string name;
  ConstructionParams params;
  std::uint64_t seed = 0;
  std::uint64_t grid_size = 0;
  std::uint64_t samples = 0;
  std::vector<ResultEntry> results;
  std::vector<Series> series;
  std::vector<Gate> gates;
  double wall_seconds = 0.0;

  void add(std::string label, double value, double stderr_ = 0.0) {
    results.push_back({std::move(label), value, stderr_});
  }
  void gate(std::string gate_name, bool passed, std::string detail = {}) {
    gates.push_back({std::move(gate_name), passed, std::move(detail)});
  }

  // Throws std::out_of_range for an unknown label.
  const ResultEntry& result(std::string_view label) const;
  const Series& find_series(std::string_view series_name) const;

  bool passed() const;
};

// One JSON document; all timing lives under the single "timing" key.
std::string to_json(const ExperimentReport& report, int indent = 2);

// Same document without the "timing" key, for reproducibility comparisons.
std::string numeric_fingerprint(const ExperimentReport& report);

// "index,value,stderr" with a header row.
std::string series_csv(const Series& series);

// Writes report.json plus <series>.csv for each series into `dir`.
void write_report(const ExperimentReport& report, const std::filesystem::path& dir);

}  // namespace riesz
