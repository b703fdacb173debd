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

#ifndef ISTATE_PG_RNG_HPP_
#define ISTATE_PG_RNG_HPP_

#include <cstdint>
#include <random>

namespace istate_pg {

// Deterministic random stream identified by (seed, stream_id). Identical ids
// yield identical draw sequences across runs and thread schedules; distinct
// stream_ids decorrelate. Every sampling operation in the project draws from
// one of these streams, and each stream has a single owner.
class RngStream {
 public:
  RngStream() : RngStream(0, 0) {}
  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t next_u64();

  // Uniform double in [0, 1) with 53 random bits.
  double uniform();
  // Uniform double in [lo, hi).
  double uniform(double lo, double hi);
  // Unbiased uniform integer in [0, n); n must be positive.
  std::uint64_t uniform_int(std::uint64_t n);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 gen_;
};

RngStream make_rng(std::uint64_t seed, std::uint64_t stream_id);

}  // namespace istate_pg

#endif  // ISTATE_PG_RNG_HPP_
