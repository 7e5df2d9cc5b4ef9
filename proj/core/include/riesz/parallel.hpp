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

#include <cstddef>
#include <functional>

namespace riesz {

// Pairwise (tree) summation of term(0) + ... + term(n-1). The association
// order depends only on n, so results are reproducible bit-for-bit for a
// fixed n regardless of how the terms were produced.
template <class Term>
double pairwise_sum(std::size_t first, std::size_t last, const Term& term) {
  constexpr std::size_t kLeaf = 16;
  const std::size_t n = last - first;
  if (n <= kLeaf) {
    double s = 0.0;
    for (std::size_t i = first; i < last; ++i) s += term(i);
    return s;
  }
  const std::size_t mid = first + n / 2;
  return pairwise_sum(first, mid, term) + pairwise_sum(mid, last, term);
}

template <class Term>
double pairwise_sum(std::size_t n, const Term& term) {
  return pairwise_sum(0, n, term);
}

// Number of worker threads: `requested` if positive, otherwise the
// RIESZ_LAB_THREADS environment variable, otherwise the hardware count.
// RIESZ_LAB_THREADS always caps the result.
int resolve_threads(int requested = 0);

// Calls body(i) for i in [0, n) on up to `threads` workers using a static
// contiguous partition. Exceptions from the body are rethrown on the caller.
void parallel_for(std::size_t n, int threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace riesz
