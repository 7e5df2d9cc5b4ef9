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

#include <string>
#include <string_view>
#include <vector>

#include "riesz/construction.hpp"

namespace riesz {

// Parameter presets shipped with the tool:
//   small-exhaustive  m=(2,2), t=(1,1), h1=8; all 9 omegas enumerable
//   clt               one stage, m=256, t=64, h1=128
//   decay             five stages, m_j=256, t=(16,32,48,64,96), h1=128
//   bound-t9, bound-t99          one stage, m=64, h1=128, symmetric spacers
//   bound-t9-nn, bound-t99-nn    the same with nonnegative spacers
//   lindeberg         one stage, m=4, t=1, h1=2
ConstructionParams preset(std::string_view name);

std::vector<std::string> preset_names();

}  // namespace riesz
