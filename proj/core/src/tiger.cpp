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

#include "istate_pg/tiger.hpp"

#include "istate_pg/errors.hpp"

namespace istate_pg {

namespace {

using namespace tiger;

const std::vector<std::string> kObsNames = {"null", "left", "right"};
const std::vector<std::string> kActionNames = {"listen", "open-left",
                                               "open-right"};
const std::string kName = "tiger";

}  // namespace

TigerEnv::TigerEnv(RngStream rng, int horizon) : rng_(rng), horizon_(horizon) {
  if (horizon < 0) throw ContractViolation("tiger: negative horizon");
}

const std::string& TigerEnv::name() const { return kName; }

const std::vector<std::string>& TigerEnv::observation_names() const {
  return kObsNames;
}

const std::vector<std::string>& TigerEnv::action_names() const {
  return kActionNames;
}

ObsId TigerEnv::reset() {
  tiger_side_ = rng_.uniform_int(2) == 0 ? kSideLeft : kSideRight;
  steps_taken_ = 0;
  done_ = false;
  return ObsId{kObsNullSignal};
}

StepResult TigerEnv::step(ActionId action) {
  if (done_)
    throw ContractViolation("tiger: step() called on finished episode");
  if (action.value < 0 || action.value >= kNumActions)
    throw ContractViolation("tiger: action out of range");

  ++steps_taken_;
  StepResult result;

  if (action.value == kActListen) {
    result.reward = kListenPenalty;
    const bool truthful = rng_.uniform() >= kListenNoise;
    const int heard =
        truthful ? tiger_side_
                 : (tiger_side_ == kSideLeft ? kSideRight : kSideLeft);
    result.obs = ObsId{heard == kSideLeft ? kObsLeft : kObsRight};
    result.done = steps_taken_ >= horizon_;
  } else {
    const int opened = action.value == kActOpenLeft ? kSideLeft : kSideRight;
    result.reward = opened == tiger_side_ ? kOpenPenalty : kOpenReward;
    result.obs = ObsId{kObsNullSignal};
    result.terminal = true;
    result.done = true;
  }

  done_ = result.done;
  return result;
}

}  // namespace istate_pg
