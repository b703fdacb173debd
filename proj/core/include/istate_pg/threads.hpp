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

#ifndef ISTATE_PG_THREADS_HPP_
#define ISTATE_PG_THREADS_HPP_

#include <cstdint>
#include <functional>

namespace istate_pg {

// Worker count for a parallel region of n independent tasks. `requested`
// of 0 means auto. The ISTATE_PG_THREADS environment variable caps the
// result; results of parallel regions must never depend on it.
int resolve_worker_count(int requested, std::int64_t num_tasks);

// Runs fn(i) for i in [0, n). Each index is processed exactly once; callers
// keep determinism by writing only to per-index slots. Exceptions thrown by
// fn are rethrown on the calling thread after all workers join.
void parallel_for(std::int64_t n, int workers,
                  const std::function<void(std::int64_t)>& fn);

}  // namespace istate_pg

#endif  // ISTATE_PG_THREADS_HPP_
