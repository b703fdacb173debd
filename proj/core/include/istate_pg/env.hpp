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

#ifndef ISTATE_PG_ENV_HPP_
#define ISTATE_PG_ENV_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "istate_pg/rng.hpp"
#include "istate_pg/types.hpp"

namespace istate_pg {

inline constexpr int kDefaultHorizon = 30;

struct StepResult {
  ObsId obs;
  double reward = 0.0;
  // done is set on terminal states and on horizon truncation; terminal only
  // when a true terminal state was reached.
  bool done = false;
  bool terminal = false;
};

// Episodic partially observable environment. Instances are single-threaded
// and own their RngStream; parallelism comes from many instances with
// distinct stream ids. After a step with done=true, step() must not be
// called again until reset().
class PomdpEnv {
 public:
  virtual ~PomdpEnv() = default;

  virtual const std::string& name() const = 0;
  // Count of real observations; the id num_observations() is reserved for
  // the null previous-observation token and is never emitted by the env.
  virtual int num_observations() const = 0;
  virtual int num_actions() const = 0;
  virtual const std::vector<std::string>& observation_names() const = 0;
  virtual const std::vector<std::string>& action_names() const = 0;

  virtual ObsId reset() = 0;
  virtual StepResult step(ActionId action) = 0;

  ObsId null_obs() const { return ObsId{num_observations()}; }
};

// Factory keyed by the config-file name strings ("heaven_hell", "tiger").
// Throws ConfigError for unknown names.
std::unique_ptr<PomdpEnv> make_env(std::string_view name, RngStream rng,
                                   int horizon = kDefaultHorizon);
bool is_known_env(std::string_view name);

// Id -> name tables as a JSON document (observations, actions, and the null
// token id), for the statemap exports and docs.
std::string id_tables_json(const PomdpEnv& env);

struct ChanceEstimate {
  double mean = 0.0;
  double stderr_of_mean = 0.0;
  std::int64_t episodes = 0;
};

// Mean episodic return of the uniform-random policy; the reference line
// learning curves are compared against.
ChanceEstimate chance_estimate(std::string_view env_name,
                               std::int64_t num_episodes, RngStream rng,
                               int horizon = kDefaultHorizon);
double chance_level(std::string_view env_name, std::int64_t num_episodes,
                    RngStream rng, int horizon = kDefaultHorizon);

}  // namespace istate_pg

#endif  // ISTATE_PG_ENV_HPP_
