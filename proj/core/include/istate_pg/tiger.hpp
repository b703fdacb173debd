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

#ifndef ISTATE_PG_TIGER_HPP_
#define ISTATE_PG_TIGER_HPP_

#include <string>
#include <vector>

#include "istate_pg/env.hpp"

namespace istate_pg {
namespace tiger {

inline constexpr int kNumObservations = 3;
inline constexpr int kObsNullSignal = 0;  // initial signal, also after opening
inline constexpr int kObsLeft = 1;
inline constexpr int kObsRight = 2;

inline constexpr int kNumActions = 3;
inline constexpr int kActListen = 0;
inline constexpr int kActOpenLeft = 1;
inline constexpr int kActOpenRight = 2;

inline constexpr int kSideLeft = 0;
inline constexpr int kSideRight = 1;

// The listen observation reports the wrong door with this probability.
inline constexpr double kListenNoise = 0.15;
inline constexpr double kListenPenalty = -0.01;
inline constexpr double kOpenReward = 0.1;
inline constexpr double kOpenPenalty = -1.0;

}  // namespace tiger

// Two doors, one hiding a tiger; the episode ends on any door opening.
class TigerEnv final : public PomdpEnv {
 public:
  explicit TigerEnv(RngStream rng, int horizon = kDefaultHorizon);

  const std::string& name() const override;
  int num_observations() const override { return tiger::kNumObservations; }
  int num_actions() const override { return tiger::kNumActions; }
  const std::vector<std::string>& observation_names() const override;
  const std::vector<std::string>& action_names() const override;

  ObsId reset() override;
  StepResult step(ActionId action) override;

  int tiger_side() const { return tiger_side_; }
  int horizon() const { return horizon_; }

 private:
  RngStream rng_;
  int horizon_;
  int tiger_side_ = tiger::kSideLeft;
  int steps_taken_ = 0;
  bool done_ = true;
};

}  // namespace istate_pg

#endif  // ISTATE_PG_TIGER_HPP_
