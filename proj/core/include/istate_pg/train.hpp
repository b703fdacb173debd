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

#ifndef ISTATE_PG_TRAIN_HPP_
#define ISTATE_PG_TRAIN_HPP_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "istate_pg/adam.hpp"
#include "istate_pg/env.hpp"
#include "istate_pg/policy.hpp"
#include "istate_pg/rng.hpp"
#include "istate_pg/types.hpp"

namespace istate_pg {

// reinforce: memoryless baseline, action head only, y == 0 throughout.
// separate: independent policy-gradient updates for the two heads.
// end_to_end: one update over the joint log-probability.
enum class TrainMode { kReinforce, kSeparate, kEndToEnd };

std::string to_string(TrainMode mode);
TrainMode parse_train_mode(std::string_view text);

struct TrainConfig {
  std::string env_name;
  TrainMode mode = TrainMode::kEndToEnd;
  int num_internal_states = 0;  // 0 -> env default (heaven_hell 2, tiger 10)
  int batch_envs = 100;
  int num_updates = 2000;
  int horizon = kDefaultHorizon;
  double step_size = 1e-2;
  double step_size_internal = -1.0;  // separate mode only; <0 -> step_size
  std::uint64_t seed = 0;
  bool baseline = false;
  int eval_every = 10;
  int hidden_width = 32;
  int trunk_dim = 0;  // end_to_end only
  int workers = 0;    // 0 = auto; always capped by ISTATE_PG_THREADS
};

int default_internal_states(std::string_view env_name);

// Fills env-dependent defaults and validates; throws ConfigError. In
// reinforce mode the internal state space degenerates to a single state.
TrainConfig resolve_config(TrainConfig config);

struct CurvePoint {
  int update = 0;
  std::int64_t episodes = 0;
  double mean_return = 0.0;
  double stderr_return = 0.0;
};

struct LearningCurve {
  std::vector<CurvePoint> points;
};

// CSV schema: update,episodes,mean_return,stderr_return
std::string curve_csv(const LearningCurve& curve);
void write_curve_csv(const LearningCurve& curve, const std::string& path);

// Runs one episode: o_prev starts at the null token and y_prev at 0, each
// step consults the policy (sampled or greedy), steps the environment, and
// records a StepRecord. Stops at done or after `horizon` steps. Greedy
// rollouts record zero log probabilities and do not draw from `sampler`.
Trajectory collect_rollout(PomdpEnv& env, const JointPolicy& policy,
                           int horizon, RngStream& sampler, bool greedy);

// One parallel rollout worker: an environment plus the stream that drives
// the policy's sampling for that environment's episodes.
struct EnvSlot {
  std::unique_ptr<PomdpEnv> env;
  RngStream sampler;
};

// Slot i uses env stream (seed, 2i+2) and sampler stream (seed, 2i+3);
// stream (seed, 1) is reserved for parameter initialization.
std::vector<EnvSlot> make_env_batch(std::string_view env_name, int batch_envs,
                                    std::uint64_t seed, int horizon);

struct BatchStats {
  double mean_return = 0.0;
  double stderr_return = 0.0;  // sample std / sqrt(batch)
};

struct OptimizerState {
  AdamState joint;
  AdamState action;
  AdamState internal;
};

struct TrainStepOptions {
  int horizon = kDefaultHorizon;
  double step_size = 1e-2;
  double step_size_internal = 1e-2;
  bool baseline = false;
  int workers = 1;
};

// Collects one stochastic rollout per slot, averages the per-trajectory
// score-function gradients for the mode's factor selection, and applies one
// Adam update (one state for reinforce/end_to_end, two for separate).
// Rollouts and per-trajectory gradients run in parallel; the merge is serial
// in slot order, so the result does not depend on the worker count.
BatchStats train_step(JointPolicy& policy, std::span<EnvSlot> slots,
                      TrainMode mode, OptimizerState& opt,
                      const TrainStepOptions& options);

struct TrainResult {
  JointPolicy policy;
  LearningCurve curve;
};

using ProgressFn = std::function<void(const CurvePoint&)>;

// Full training loop; logs batch statistics every eval_every updates (and at
// the final update). Fully reproducible from config.seed. Throws
// NumericalError naming the update index if parameters go non-finite.
TrainResult train(const TrainConfig& config, const ProgressFn& progress = {});

}  // namespace istate_pg

#endif  // ISTATE_PG_TRAIN_HPP_
