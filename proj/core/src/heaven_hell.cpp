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

#include "istate_pg/heaven_hell.hpp"

#include <array>

#include "istate_pg/errors.hpp"

namespace istate_pg {

namespace {

using namespace heaven_hell;

struct Coord {
  int x;
  int y;
};

constexpr std::array<Coord, kNumTiles> kTileCoord = {{
    {0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0},  // top row
    {2, 1}, {2, 2}, {2, 3},                  // stem
}};

// Tile at (x, y), or -1 when the cell is not part of the maze.
int tile_at(int x, int y) {
  for (int t = 0; t < kNumTiles; ++t) {
    if (kTileCoord[t].x == x && kTileCoord[t].y == y) return t;
  }
  return -1;
}

// Destination of an action; off-grid moves are no-ops.
int move(int tile, int action) {
  int x = kTileCoord[tile].x;
  int y = kTileCoord[tile].y;
  switch (action) {
    case kUp: --y; break;
    case kRight: ++x; break;
    case kDown: ++y; break;
    case kLeft: --x; break;
    default: throw ContractViolation("heaven_hell: action out of range");
  }
  const int dest = tile_at(x, y);
  return dest >= 0 ? dest : tile;
}

const std::vector<std::string> kObsNames = {
    "tile0", "tile1", "tile2", "tile3", "tile4", "tile5", "tile6", "tile7",
    "tile7-heaven-left", "tile7-heaven-right"};
const std::vector<std::string> kActionNames = {"up", "right", "down", "left"};
const std::string kName = "heaven_hell";

}  // namespace

HeavenHellEnv::HeavenHellEnv(RngStream rng, int horizon)
    : rng_(rng), horizon_(horizon) {
  if (horizon < 0) throw ContractViolation("heaven_hell: negative horizon");
}

const std::string& HeavenHellEnv::name() const { return kName; }

const std::vector<std::string>& HeavenHellEnv::observation_names() const {
  return kObsNames;
}

const std::vector<std::string>& HeavenHellEnv::action_names() const {
  return kActionNames;
}

ObsId HeavenHellEnv::observe() const {
  if (agent_tile_ == kStartTile) {
    return ObsId{heaven_tile_ == kLeftEndTile ? kObsHeavenLeft
                                              : kObsHeavenRight};
  }
  return ObsId{agent_tile_};
}

ObsId HeavenHellEnv::reset() {
  agent_tile_ = kStartTile;
  heaven_tile_ = rng_.uniform_int(2) == 0 ? kLeftEndTile : kRightEndTile;
  steps_taken_ = 0;
  done_ = false;
  return observe();
}

StepResult HeavenHellEnv::step(ActionId action) {
  if (done_)
    throw ContractViolation("heaven_hell: step() called on finished episode");
  if (action.value < 0 || action.value >= kNumActions)
    throw ContractViolation("heaven_hell: action out of range");

  agent_tile_ = move(agent_tile_, action.value);
  ++steps_taken_;

  StepResult result;
  result.reward = kStepPenalty;
  if (agent_tile_ == heaven_tile_) {
    result.reward += kHeavenReward;
    result.terminal = true;
  } else if (agent_tile_ == kLeftEndTile || agent_tile_ == kRightEndTile) {
    result.reward += kHellPenalty;
    result.terminal = true;
  }
  result.done = result.terminal || steps_taken_ >= horizon_;
  result.obs = observe();
  done_ = result.done;
  return result;
}

}  // namespace istate_pg
