// Copyright 2026 The istate-pg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "istate_pg/threads.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace istate_pg {

int resolve_worker_count(int requested, std::int64_t num_tasks) {
  if (num_tasks <= 1) return 1;
  int cap = 0;
  if (const char* env = std::getenv("ISTATE_PG_THREADS")) {
    try {
      cap = std::stoi(env);
    } catch (...) {
      cap = 0;
    }
  }
  int workers = requested > 0 ? requested
                              : static_cast<int>(std::thread::hardware_concurrency());
  if (workers <= 0) workers = 1;
  if (cap > 0 && workers > cap) workers = cap;
  if (static_cast<std::int64_t>(workers) > num_tasks)
    workers = static_cast<int>(num_tasks);
  return workers;
}

void parallel_for(std::int64_t n, int workers,
                  const std::function<void(std::int64_t)>& fn) {
  if (n <= 0) return;
  if (workers <= 1 || n == 1) {
    for (std::int64_t i = 0; i < n; ++i) fn(i);
    return;
  }

  std::atomic<std::int64_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  auto work = [&] {
    for (;;) {
      const std::int64_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
        }
        next.store(n, std::memory_order_relaxed);
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers) - 1);
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (std::thread& t : pool) t.join();

  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace istate_pg
