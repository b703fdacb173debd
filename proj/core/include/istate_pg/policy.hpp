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

#ifndef ISTATE_PG_POLICY_HPP_
#define ISTATE_PG_POLICY_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "istate_pg/rng.hpp"
#include "istate_pg/types.hpp"

namespace istate_pg {

// logits - logsumexp(logits), computed with a max shift. Throws
// ContractViolation on non-finite input.
std::vector<double> log_softmax(std::span<const double> logits);

// Lowest index among maximal entries.
int argmax_index(std::span<const double> values);

struct CategoricalSample {
  int index = 0;
  double log_prob = 0.0;
};

// Draws index i with probability softmax(logits)[i]; log_prob is filled from
// log_softmax. Consumes exactly one uniform draw.
CategoricalSample sample_categorical(RngStream& rng,
                                     std::span<const double> logits);

// Flat gradient accumulator, one slot per parameter, plus the number of
// trajectories accumulated so far.
struct GradientBuffer {
  std::vector<double> values;
  std::int64_t num_samples = 0;

  GradientBuffer() = default;
  explicit GradientBuffer(std::size_t n) : values(n, 0.0) {}

  void reset();
  void add(const GradientBuffer& other);
  void scale(double factor);
  bool finite() const;
};

// Which log-probability factors a gradient covers: the action head only
// (theta), the internal head only (phi), or all parameters (psi).
enum class GradWhich { kActionOnly, kInternalOnly, kJoint };

struct PolicyConfig {
  std::string env_name;
  int num_observations = 0;  // real observations; one-hot width is +1 for null
  int num_actions = 0;
  int num_internal_states = 1;
  int hidden_width = 32;
  // Width of the optional shared observation embedding. 0 disables it and
  // both heads consume the raw observation one-hot; when positive, both heads
  // read the same embedding and their gradients couple through it, so only
  // the end-to-end mode may train such a policy.
  int trunk_dim = 0;

  int obs_onehot_dim() const { return num_observations + 1; }
  int obs_feature_dim() const {
    return trunk_dim > 0 ? trunk_dim : obs_onehot_dim();
  }
  int head_input_dim() const { return obs_feature_dim() + num_internal_states; }
  friend bool operator==(const PolicyConfig&, const PolicyConfig&) = default;
};

struct ActResult {
  ActionId action;
  InternalStateId internal;
  double log_prob_action = 0.0;
  double log_prob_internal = 0.0;
};

struct GreedyActResult {
  ActionId action;
  InternalStateId internal;
};

// Joint policy pi(a|o_t, y_t) * xi(y_t|o_{t-1}, y_{t-1}): two one-hidden-layer
// tanh heads over one-hot (observation, internal state) inputs, stored as one
// flat parameter vector.
//
// Parameter packing, in order:
//   [trunk W_e (trunk_dim x obs_onehot_dim), if trunk_dim > 0]
//   [action head:   W1 (hidden x in), b1, W2 (num_actions x hidden), b2]
//   [internal head: W1 (hidden x in), b1, W2 (num_internal x hidden), b2]
// with all matrices row-major. GradientBuffers for kActionOnly and
// kInternalOnly cover just that head's block; kJoint covers everything.
class JointPolicy {
 public:
  explicit JointPolicy(PolicyConfig cfg);

  // Weights uniform in [-0.05, 0.05], biases zero.
  static JointPolicy random_init(PolicyConfig cfg, RngStream& rng);

  const PolicyConfig& config() const { return cfg_; }
  std::size_t num_params() const { return params_.size(); }
  std::span<double> params() { return params_; }
  std::span<const double> params() const { return params_; }

  // theta / phi views into the flat vector (excluding the shared trunk).
  std::span<double> action_head_params();
  std::span<double> internal_head_params();
  std::size_t grad_size(GradWhich which) const;

  std::vector<double> action_logits(ObsId obs, InternalStateId internal) const;
  std::vector<double> internal_logits(ObsId prev_obs,
                                      InternalStateId prev_internal) const;

  // One joint decision. At t=0 the internal state is fixed to 0 with
  // log_prob_internal = 0 and prev_obs is ignored (callers pass the null
  // token); otherwise y_t is sampled from the internal head, then a_t from
  // the action head conditioned on (o_t, y_t). Consumes the internal draw
  // before the action draw.
  ActResult act(ObsId obs, ObsId prev_obs, InternalStateId prev_internal,
                int t, RngStream& rng) const;

  // As act() but both heads take the argmax; ties break to the lowest index.
  GreedyActResult act_greedy(ObsId obs, ObsId prev_obs,
                             InternalStateId prev_internal, int t) const;

  // Adds weight * sum_t grad log(selected factors) to `out`, which must be
  // sized grad_size(which). The t=0 step contributes only its action factor.
  void accumulate_logprob_grad(const Trajectory& traj, GradWhich which,
                               double weight, GradientBuffer& out) const;

  // Σ_t log(selected factors); the scalar whose parameter gradient
  // accumulate_logprob_grad computes (times weight).
  double logprob_sum(const Trajectory& traj, GradWhich which) const;

  bool params_finite() const;

  std::string checkpoint_json() const;
  static JointPolicy from_checkpoint_json(const std::string& text);
  void save_checkpoint(const std::string& path) const;
  static JointPolicy load_checkpoint(const std::string& path);

 private:
  struct HeadLayout {
    std::size_t w1 = 0, b1 = 0, w2 = 0, b2 = 0, end = 0;
    int in = 0, hidden = 0, out = 0;
  };
  struct Workspace;

  void validate_obs(ObsId obs, bool allow_null) const;
  void forward_head(const HeadLayout& head, int obs_col, int y_col,
                    std::vector<double>& hidden_out,
                    std::vector<double>& logits_out) const;
  void backward_factor(const HeadLayout& head, std::size_t head_grad_offset,
                       bool include_trunk, int obs_col, int y_col, int chosen,
                       double coeff, GradientBuffer& out, Workspace& ws) const;

  PolicyConfig cfg_;
  HeadLayout action_;
  HeadLayout internal_;
  std::size_t trunk_size_ = 0;
  std::vector<double> params_;
};

// sum_t grad log(selected factors) * R_tau for one trajectory (Monte-Carlo
// score-function estimate of the policy gradient).
GradientBuffer logprob_grad(const JointPolicy& policy, const Trajectory& traj,
                            GradWhich which);

}  // namespace istate_pg

#endif  // ISTATE_PG_POLICY_HPP_
