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

#include "istate_pg/types.hpp"

#include <istream>
#include <ostream>
#include <string>

#include <json.hpp>

#include "istate_pg/errors.hpp"

namespace istate_pg {

double episodic_return(const Trajectory& traj) {
  double total = 0.0;
  for (const StepRecord& step : traj.steps) total += step.reward;
  return total;
}

std::string trajectory_to_jsonl(const Trajectory& traj) {
  nlohmann::json j;
  auto& obs = j["obs"] = nlohmann::json::array();
  auto& internal = j["internal"] = nlohmann::json::array();
  auto& action = j["action"] = nlohmann::json::array();
  auto& reward = j["reward"] = nlohmann::json::array();
  for (const StepRecord& step : traj.steps) {
    obs.push_back(step.obs.value);
    internal.push_back(step.internal.value);
    action.push_back(step.action.value);
    reward.push_back(step.reward);
  }
  j["terminated"] = traj.terminated;
  return j.dump();
}

Trajectory trajectory_from_jsonl(const std::string& line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("bad trajectory line: ") + e.what());
  }
  for (const char* key : {"obs", "internal", "action", "reward", "terminated"}) {
    if (!j.contains(key))
      throw ConfigError(std::string("trajectory line missing key \"") + key + "\"");
  }
  const auto& obs = j["obs"];
  const auto& internal = j["internal"];
  const auto& action = j["action"];
  const auto& reward = j["reward"];
  const std::size_t n = obs.size();
  if (internal.size() != n || action.size() != n || reward.size() != n)
    throw ConfigError("trajectory line has mismatched array lengths");

  Trajectory traj;
  traj.steps.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    StepRecord step;
    step.obs = ObsId{obs[i].get<int>()};
    step.internal = InternalStateId{internal[i].get<int>()};
    step.action = ActionId{action[i].get<int>()};
    step.reward = reward[i].get<double>();
    traj.steps.push_back(step);
  }
  traj.terminated = j["terminated"].get<bool>();
  return traj;
}

void write_trajectories_jsonl(std::span<const Trajectory> trajs, std::ostream& out) {
  for (const Trajectory& traj : trajs) out << trajectory_to_jsonl(traj) << '\n';
}

std::vector<Trajectory> read_trajectories_jsonl(std::istream& in) {
  std::vector<Trajectory> trajs;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    trajs.push_back(trajectory_from_jsonl(line));
  }
  return trajs;
}

}  // namespace istate_pg
