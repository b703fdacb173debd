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

#ifndef ISTATE_PG_TYPES_HPP_
#define ISTATE_PG_TYPES_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace istate_pg {

// Dense index into an environment's enumerated observation set. The index
// num_observations is reserved as the "no previous observation" token fed to
// the internal-state head at t=0.
struct ObsId {
  int value = 0;
  friend bool operator==(ObsId, ObsId) = default;
};

// Dense index into an environment's action set.
struct ActionId {
  int value = 0;
  friend bool operator==(ActionId, ActionId) = default;
};

// Dense index into the configured internal-state space.
struct InternalStateId {
  int value = 0;
  friend bool operator==(InternalStateId, InternalStateId) = default;
};

// One interaction step: the observation the agent saw, the internal state it
// held while acting, the action taken, the reward earned, and the log
// probabilities of the two policy factors that produced (action, internal).
struct StepRecord {
  ObsId obs;
  InternalStateId internal;
  ActionId action;
  double reward = 0.0;
  double log_prob_action = 0.0;
  double log_prob_internal = 0.0;
  friend bool operator==(const StepRecord&, const StepRecord&) = default;
};

// One episode. `terminated` is true iff the environment reached a terminal
// state before the horizon; horizon truncation leaves it false.
struct Trajectory {
  std::vector<StepRecord> steps;
  bool terminated = false;

  std::size_t size() const { return steps.size(); }
  bool empty() const { return steps.empty(); }
  friend bool operator==(const Trajectory&, const Trajectory&) = default;
};

// Undiscounted sum of step rewards; 0 for an empty trajectory.
double episodic_return(const Trajectory& traj);

// JSON-lines serialization: one episode per line with fields
// obs[], internal[], action[], reward[], terminated. Log probabilities are
// not part of the wire format and read back as zero.
std::string trajectory_to_jsonl(const Trajectory& traj);
Trajectory trajectory_from_jsonl(const std::string& line);
void write_trajectories_jsonl(std::span<const Trajectory> trajs, std::ostream& out);
std::vector<Trajectory> read_trajectories_jsonl(std::istream& in);

}  // namespace istate_pg

#endif  // ISTATE_PG_TYPES_HPP_
