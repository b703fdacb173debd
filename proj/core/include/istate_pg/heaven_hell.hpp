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

#ifndef ISTATE_PG_HEAVEN_HELL_HPP_
#define ISTATE_PG_HEAVEN_HELL_HPP_

#include <string>
#include <vector>

#include "istate_pg/env.hpp"

namespace istate_pg {
namespace heaven_hell {

// T-maze on a 5x4 grid. Top row tiles 0..4 at (0,0)..(4,0); stem tiles
// 5=(2,1), 6=(2,2), 7=(2,3). The agent starts at tile 7, the path splits at
// tile 2, and the two ends 0/4 are heaven and hell (drawn per episode).
inline constexpr int kNumTiles = 8;
inline constexpr int kStartTile = 7;
inline constexpr int kBranchTile = 2;
inline constexpr int kLeftEndTile = 0;
inline constexpr int kRightEndTile = 4;

// Observations: (tile t, heaven unknown) for t in 0..7 occupy ids 0..7, then
// (tile 7, heaven left) and (tile 7, heaven right). Id 7 is unreachable since
// the heaven side is always visible on tile 7, but is kept so that ids stay
// a dense product encoding.
inline constexpr int kNumObservations = 10;
inline constexpr int kObsHeavenLeft = 8;
inline constexpr int kObsHeavenRight = 9;

inline constexpr int kNumActions = 4;
enum Action : int { kUp = 0, kRight = 1, kDown = 2, kLeft = 3 };

inline constexpr double kStepPenalty = -0.01;
inline constexpr double kHeavenReward = 1.0;
inline constexpr double kHellPenalty = -1.0;

}  // namespace heaven_hell

class HeavenHellEnv final : public PomdpEnv {
 public:
  explicit HeavenHellEnv(RngStream rng, int horizon = kDefaultHorizon);

  const std::string& name() const override;
  int num_observations() const override { return heaven_hell::kNumObservations; }
  int num_actions() const override { return heaven_hell::kNumActions; }
  const std::vector<std::string>& observation_names() const override;
  const std::vector<std::string>& action_names() const override;

  ObsId reset() override;
  StepResult step(ActionId action) override;

  int agent_tile() const { return agent_tile_; }
  int heaven_tile() const { return heaven_tile_; }
  int horizon() const { return horizon_; }

 private:
  ObsId observe() const;

  RngStream rng_;
  int horizon_;
  int agent_tile_ = heaven_hell::kStartTile;
  int heaven_tile_ = heaven_hell::kLeftEndTile;
  int steps_taken_ = 0;
  bool done_ = true;
};

}  // namespace istate_pg

#endif  // ISTATE_PG_HEAVEN_HELL_HPP_
