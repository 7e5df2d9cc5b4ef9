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
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "riesz/construction.hpp"

namespace riesz::cli {

class InvalidConfig : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitGateFailed = 2;

const std::vector<std::string>& experiment_names();

// Fully resolved invocation. Flags override values from a --params file.
struct RunConfig {
  std::string experiment;
  std::string preset;                 // empty when params were given explicitly
  ConstructionParams params;
  std::uint64_t seed = 1;
  std::size_t samples = 0;            // 0: experiment default
  std::uint64_t grid = 0;             // 0: auto
  std::filesystem::path out = "riesz-lab-out";
  int stage = 0;                      // 0: last stage
  int stages = 0;                     // 0: all stages
  double eps = 0.1;
  int threads = 0;
};

// Parses argv[1..]; throws InvalidConfig with a diagnostic.
RunConfig parse_args(const std::vector<std::string>& args);

// Runs the experiment, writes artifacts under config.out and prints one line
// per result. Returns kExitOk, kExitGateFailed, or kExitConfig.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// argv entry point used by the executable.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace riesz::cli
