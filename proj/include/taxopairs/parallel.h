// Copyright 2026 The Taxopairs Authors.
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

#ifndef TAXOPAIRS_PARALLEL_H_
#define TAXOPAIRS_PARALLEL_H_

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace taxopairs {

// Runs fn(worker, begin, end) over `workers` contiguous slices of [0, count).
// Slices are fixed by (count, workers) alone, so callers that merge results
// in slice order get output independent of scheduling. The first exception
// thrown by any worker is rethrown on the calling thread.
template <typename Fn>
void ParallelFor(size_t count, int workers, Fn &&fn) {
  size_t n = static_cast<size_t>(std::max(1, workers));
  n = std::min(n, std::max<size_t>(count, 1));
  if (n == 1) {
    fn(size_t{0}, size_t{0}, count);
    return;
  }
  std::vector<std::exception_ptr> errors(n);
  std::vector<std::thread> threads;
  threads.reserve(n);
  for (size_t w = 0; w < n; ++w) {
    size_t begin = count * w / n;
    size_t end = count * (w + 1) / n;
    threads.emplace_back([&, w, begin, end] {
      try {
        fn(w, begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto &t : threads) t.join();
  for (auto &e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace taxopairs

#endif  // TAXOPAIRS_PARALLEL_H_
