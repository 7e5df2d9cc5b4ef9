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

#include "riesz/presets.hpp"

#include "riesz/errors.hpp"

namespace riesz {
namespace {

ConstructionParams make(std::vector<std::int64_t> m, std::vector<std::int64_t> t,
                        std::int64_t h1, SpacerSupport support) {
  ConstructionParams p;
  p.stages = static_cast<int>(m.size());
  p.cuts = std::move(m);
  p.spacers = std::move(t);
  p.initial_height = h1;
  p.support = support;
  return p;
}

}  // namespace

ConstructionParams preset(std::string_view name) {
  constexpr auto sym = SpacerSupport::kSymmetric;
  constexpr auto nn = SpacerSupport::kNonNegative;
  if (name == "small-exhaustive") return make({2, 2}, {1, 1}, 8, sym);
  if (name == "clt") return make({256}, {64}, 128, sym);
  if (name == "decay") return make({256, 256, 256, 256, 256}, {16, 32, 48, 64, 96}, 128, sym);
  if (name == "bound-t9") return make({256}, {9}, 128, sym);
  if (name == "bound-t99") return make({256}, {99}, 128, sym);
  if (name == "bound-t9-nn") return make({256}, {9}, 128, nn);
  if (name == "bound-t99-nn") return make({256}, {99}, 128, nn);
  if (name == "lindeberg") return make({4}, {1}, 2, sym);
  std::string valid;
  for (const auto& n : preset_names()) valid += (valid.empty() ? "" : ", ") + n;
  throw InvalidParams("unknown preset '" + std::string(name) + "' (valid: " + valid + ")");
}

std::vector<std::string> preset_names() {
  return {"small-exhaustive", "clt",         "decay",        "bound-t9",
          "bound-t99",        "bound-t9-nn", "bound-t99-nn", "lindeberg"};
}

}  // namespace riesz
