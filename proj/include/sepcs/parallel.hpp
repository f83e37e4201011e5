// sepcs/parallel.hpp

// Copyright 2026 the sepcs authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABILITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

// OpenMP helpers. Every construct here is arranged so that results do not
// depend on the number of threads: loop bodies write disjoint outputs, and
// reductions accumulate into a fixed block grid that is combined serially in
// index order. A run with OMP_NUM_THREADS=1 is bit-identical to one with 64.

namespace sepcs::par {

int max_threads();

/// Parallel loop over [0, n). The body must write disjoint state per index.
/// Loops below `grain` iterations run serially.
template <class F>
void parallel_for(std::size_t n, F&& body, std::size_t grain = 512) {
  if (n < grain) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  const std::int64_t ni = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < ni; ++i) body(static_cast<std::size_t>(i));
}

/// Sum of term(i) over [0, n) with a fixed block decomposition, so the
/// rounding pattern is independent of the thread count.
template <class F>
double blocked_sum(std::size_t n, F&& term, std::size_t block = 4096) {
  if (n == 0) return 0.0;
  const std::size_t n_blocks = (n + block - 1) / block;
  if (n_blocks == 1) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += term(i);
    return s;
  }
  std::vector<double> partial(n_blocks, 0.0);
  const std::int64_t nb = static_cast<std::int64_t>(n_blocks);
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < nb; ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * block;
    const std::size_t hi = lo + block < n ? lo + block : n;
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += term(i);
    partial[static_cast<std::size_t>(b)] = s;
  }
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

}  // namespace sepcs::par
