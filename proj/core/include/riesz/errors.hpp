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

#include <stdexcept>
#include <string>

namespace riesz {

// Construction parameters violate a guard (m_j < 2, h_j <= t_j, ...).
class InvalidParams : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A height or exponent left the exact 64-bit range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// An invariant that parameter guards should have made impossible.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The grid cannot integrate the requested quantity exactly.
class GridTooCoarse : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace riesz
