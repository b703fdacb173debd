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

#include "istate_pg/env.hpp"

#include <cmath>
#include <string>

#include <json.hpp>

#include "istate_pg/errors.hpp"
#include "istate_pg/heaven_hell.hpp"
#include "istate_pg/tiger.hpp"

namespace istate_pg {

std::unique_ptr<PomdpEnv> make_env(std::string_view name, RngStream rng,
                                   int horizon) {
  if (name == "heaven_hell")
    return std::make_unique<HeavenHellEnv>(rng, horizon);
  if (name == "tiger") return std::make_unique<TigerEnv>(rng, horizon);
  throw ConfigError("unknown environment \"" + std::string(name) +
                    "\" (known: heaven_hell, tiger)");
}

bool is_known_env(std::string_view name) {
  return name == "heaven_hell" || name == "tiger";
}

std::string id_tables_json(const PomdpEnv& env) {
  nlohmann::json j;
  j["env"] = env.name();
  j["observations"] = env.observation_names();
  j["null_observation_id"] = env.null_obs().value;
  j["actions"] = env.action_names();
  return j.dump(2);
}

ChanceEstimate chance_estimate(std::string_view env_name,
                               std::int64_t num_episodes, RngStream rng,
                               int horizon) {
  if (num_episodes < 1)
    throw ContractViolation("chance_estimate: num_episodes must be >= 1");
  auto env = make_env(env_name, rng, horizon);
  const int num_actions = env->num_actions();

  // Action draws reuse the env-owned stream via a second stream derived from
  // the same ids; chance estimation has no policy stream to borrow.
  RngStream action_rng(rng.seed() ^ 0x9e3779b97f4a7c15ull, rng.stream_id());

  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::int64_t ep = 0; ep < num_episodes; ++ep) {
    env->reset();
    double ret = 0.0;
    for (int t = 0; t < horizon; ++t) {
      const ActionId a{static_cast<int>(action_rng.uniform_int(num_actions))};
      const StepResult r = env->step(a);
      ret += r.reward;
      if (r.done) break;
    }
    sum += ret;
    sum_sq += ret * ret;
  }

  ChanceEstimate est;
  est.episodes = num_episodes;
  est.mean = sum / static_cast<double>(num_episodes);
  if (num_episodes > 1) {
    const double var =
        (sum_sq - sum * sum / static_cast<double>(num_episodes)) /
        static_cast<double>(num_episodes - 1);
    est.stderr_of_mean =
        std::sqrt(var > 0 ? var : 0.0) / std::sqrt(static_cast<double>(num_episodes));
  }
  return est;
}

double chance_level(std::string_view env_name, std::int64_t num_episodes,
                    RngStream rng, int horizon) {
  return chance_estimate(env_name, num_episodes, rng, horizon).mean;
}

}  // namespace istate_pg
