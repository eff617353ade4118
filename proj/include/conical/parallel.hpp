// Copyright 2026 The conical-lab developers
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

#ifndef CONICAL_PARALLEL_HPP
#define CONICAL_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace conical {

// Worker cap: hardware concurrency clipped by CONICAL_LAB_THREADS.
inline int thread_count() {
  int count = static_cast<int>(std::thread::hardware_concurrency());
  if (count < 1) {
    count = 1;
  }
  if (const char* env = std::getenv("CONICAL_LAB_THREADS")) {
    try {
      const int cap = std::stoi(env);
      if (cap >= 1) {
        count = std::min(count, cap);
      }
    } catch (const std::exception&) {
    }
  }
  return count;
}

// Runs body(i) for i in [0, n). Results must be written to index-addressed
// storage by the body; iteration order is unspecified. The first exception
// is rethrown on the caller thread.
template <typename Body>
void parallel_for(int n, Body&& body) {
  const int workers = std::min(thread_count(), std::max(n, 1));
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) {
      body(i);
    }
    return;
  }
  std::atomic<int> next(0);
  std::exception_ptr error;
  std::atomic<bool> failed(false);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
        if (failed.load()) {
          return;
        }
        try {
          body(i);
        } catch (...) {
          if (!failed.exchange(true)) {
            error = std::current_exception();
          }
          return;
        }
      }
    });
  }
  for (std::thread& t : pool) {
    t.join();
  }
  if (error) {
    std::rethrow_exception(error);
  }
}

}  // namespace conical

#endif
