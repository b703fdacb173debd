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

#include "istate_pg/policy.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "istate_pg/errors.hpp"
#include "istate_pg/version.hpp"

namespace istate_pg {

namespace {

void log_softmax_into(std::span<const double> logits,
                      std::vector<double>& out) {
  if (logits.empty())
    throw ContractViolation("log_softmax: empty logits");
  double max = logits[0];
  for (double v : logits) {
    if (!std::isfinite(v))
      throw ContractViolation("log_softmax: non-finite logit");
    max = std::max(max, v);
  }
  double sum = 0.0;
  for (double v : logits) sum += std::exp(v - max);
  const double lse = max + std::log(sum);
  out.resize(logits.size());
  for (std::size_t i = 0; i < logits.size(); ++i) out[i] = logits[i] - lse;
}

}  // namespace

std::vector<double> log_softmax(std::span<const double> logits) {
  std::vector<double> out;
  log_softmax_into(logits, out);
  return out;
}

int argmax_index(std::span<const double> values) {
  if (values.empty()) throw ContractViolation("argmax_index: empty input");
  int best = 0;
  for (int i = 1; i < static_cast<int>(values.size()); ++i) {
    if (values[i] > values[best]) best = i;
  }
  return best;
}

CategoricalSample sample_categorical(RngStream& rng,
                                     std::span<const double> logits) {
  const std::vector<double> lsm = log_softmax(logits);
  const double u = rng.uniform();
  double cum = 0.0;
  int index = static_cast<int>(lsm.size()) - 1;
  for (std::size_t i = 0; i < lsm.size(); ++i) {
    cum += std::exp(lsm[i]);
    if (u < cum) {
      index = static_cast<int>(i);
      break;
    }
  }
  return CategoricalSample{index, lsm[static_cast<std::size_t>(index)]};
}

void GradientBuffer::reset() {
  std::fill(values.begin(), values.end(), 0.0);
  num_samples = 0;
}

void GradientBuffer::add(const GradientBuffer& other) {
  if (other.values.size() != values.size())
    throw ContractViolation("GradientBuffer::add: size mismatch");
  for (std::size_t i = 0; i < values.size(); ++i) values[i] += other.values[i];
  num_samples += other.num_samples;
}

void GradientBuffer::scale(double factor) {
  for (double& v : values) v *= factor;
}

bool GradientBuffer::finite() const {
  for (double v : values) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

struct JointPolicy::Workspace {
  std::vector<double> hidden;
  std::vector<double> logits;
  std::vector<double> lsm;
  std::vector<double> dz;
  std::vector<double> gpre;
};

JointPolicy::JointPolicy(PolicyConfig cfg) : cfg_(std::move(cfg)) {
  if (cfg_.num_observations < 1 || cfg_.num_actions < 1 ||
      cfg_.num_internal_states < 1 || cfg_.hidden_width < 1 ||
      cfg_.trunk_dim < 0)
    throw ContractViolation("JointPolicy: bad dimensions");

  trunk_size_ = cfg_.trunk_dim > 0
                    ? static_cast<std::size_t>(cfg_.trunk_dim) *
                          static_cast<std::size_t>(cfg_.obs_onehot_dim())
                    : 0;

  auto layout_head = [&](std::size_t offset, int out) {
    HeadLayout head;
    head.in = cfg_.head_input_dim();
    head.hidden = cfg_.hidden_width;
    head.out = out;
    head.w1 = offset;
    head.b1 = head.w1 + static_cast<std::size_t>(head.hidden) * head.in;
    head.w2 = head.b1 + static_cast<std::size_t>(head.hidden);
    head.b2 = head.w2 + static_cast<std::size_t>(head.out) * head.hidden;
    head.end = head.b2 + static_cast<std::size_t>(head.out);
    return head;
  };

  action_ = layout_head(trunk_size_, cfg_.num_actions);
  internal_ = layout_head(action_.end, cfg_.num_internal_states);
  params_.assign(internal_.end, 0.0);
}

JointPolicy JointPolicy::random_init(PolicyConfig cfg, RngStream& rng) {
  JointPolicy policy(std::move(cfg));
  auto init_block = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      policy.params_[i] = rng.uniform(-0.05, 0.05);
  };
  init_block(0, policy.trunk_size_);  // trunk weights (if any)
  for (const HeadLayout* head : {&policy.action_, &policy.internal_}) {
    init_block(head->w1, head->b1);  // W1; biases stay zero
    init_block(head->w2, head->b2);  // W2
  }
  return policy;
}

std::span<double> JointPolicy::action_head_params() {
  return std::span<double>(params_).subspan(action_.w1,
                                            action_.end - action_.w1);
}

std::span<double> JointPolicy::internal_head_params() {
  return std::span<double>(params_).subspan(internal_.w1,
                                            internal_.end - internal_.w1);
}

std::size_t JointPolicy::grad_size(GradWhich which) const {
  switch (which) {
    case GradWhich::kActionOnly: return action_.end - action_.w1;
    case GradWhich::kInternalOnly: return internal_.end - internal_.w1;
    case GradWhich::kJoint: return params_.size();
  }
  throw ContractViolation("grad_size: bad GradWhich");
}

void JointPolicy::validate_obs(ObsId obs, bool allow_null) const {
  const int limit = cfg_.num_observations + (allow_null ? 1 : 0);
  if (obs.value < 0 || obs.value >= limit)
    throw ContractViolation("JointPolicy: observation id out of range");
}

void JointPolicy::forward_head(const HeadLayout& head, int obs_col, int y_col,
                               std::vector<double>& hidden_out,
                               std::vector<double>& logits_out) const {
  const double* w1 = params_.data() + head.w1;
  const double* b1 = params_.data() + head.b1;
  const double* w2 = params_.data() + head.w2;
  const double* b2 = params_.data() + head.b2;
  const int in = head.in;
  const int y_feature = cfg_.obs_feature_dim() + y_col;

  hidden_out.resize(static_cast<std::size_t>(head.hidden));
  if (cfg_.trunk_dim > 0) {
    const double* trunk = params_.data();
    const int obs_dim = cfg_.obs_onehot_dim();
    for (int h = 0; h < head.hidden; ++h) {
      double pre = b1[h] + w1[h * in + y_feature];
      const double* w1_row = w1 + static_cast<std::size_t>(h) * in;
      for (int k = 0; k < cfg_.trunk_dim; ++k)
        pre += w1_row[k] * trunk[k * obs_dim + obs_col];
      hidden_out[static_cast<std::size_t>(h)] = std::tanh(pre);
    }
  } else {
    for (int h = 0; h < head.hidden; ++h) {
      const double pre =
          b1[h] + w1[h * in + obs_col] + w1[h * in + y_feature];
      hidden_out[static_cast<std::size_t>(h)] = std::tanh(pre);
    }
  }

  logits_out.resize(static_cast<std::size_t>(head.out));
  for (int o = 0; o < head.out; ++o) {
    double z = b2[o];
    const double* w2_row = w2 + static_cast<std::size_t>(o) * head.hidden;
    for (int h = 0; h < head.hidden; ++h)
      z += w2_row[h] * hidden_out[static_cast<std::size_t>(h)];
    logits_out[static_cast<std::size_t>(o)] = z;
  }
}

std::vector<double> JointPolicy::action_logits(ObsId obs,
                                               InternalStateId internal) const {
  validate_obs(obs, /*allow_null=*/false);
  if (internal.value < 0 || internal.value >= cfg_.num_internal_states)
    throw ContractViolation("JointPolicy: internal state id out of range");
  std::vector<double> hidden, logits;
  forward_head(action_, obs.value, internal.value, hidden, logits);
  return logits;
}

std::vector<double> JointPolicy::internal_logits(
    ObsId prev_obs, InternalStateId prev_internal) const {
  validate_obs(prev_obs, /*allow_null=*/true);
  if (prev_internal.value < 0 ||
      prev_internal.value >= cfg_.num_internal_states)
    throw ContractViolation("JointPolicy: internal state id out of range");
  std::vector<double> hidden, logits;
  forward_head(internal_, prev_obs.value, prev_internal.value, hidden, logits);
  return logits;
}

ActResult JointPolicy::act(ObsId obs, ObsId prev_obs,
                           InternalStateId prev_internal, int t,
                           RngStream& rng) const {
  if (t < 0) throw ContractViolation("act: negative t");
  ActResult result;
  if (t == 0 || cfg_.num_internal_states == 1) {
    result.internal = InternalStateId{0};
    result.log_prob_internal = 0.0;
  } else {
    const auto logits = internal_logits(prev_obs, prev_internal);
    const auto sample = sample_categorical(rng, logits);
    result.internal = InternalStateId{sample.index};
    result.log_prob_internal = sample.log_prob;
  }
  const auto logits = action_logits(obs, result.internal);
  const auto sample = sample_categorical(rng, logits);
  result.action = ActionId{sample.index};
  result.log_prob_action = sample.log_prob;
  return result;
}

GreedyActResult JointPolicy::act_greedy(ObsId obs, ObsId prev_obs,
                                        InternalStateId prev_internal,
                                        int t) const {
  if (t < 0) throw ContractViolation("act_greedy: negative t");
  GreedyActResult result;
  if (t == 0 || cfg_.num_internal_states == 1) {
    result.internal = InternalStateId{0};
  } else {
    const auto logits = internal_logits(prev_obs, prev_internal);
    result.internal = InternalStateId{argmax_index(logits)};
  }
  const auto logits = action_logits(obs, result.internal);
  result.action = ActionId{argmax_index(logits)};
  return result;
}

void JointPolicy::backward_factor(const HeadLayout& head,
                                  std::size_t head_grad_offset,
                                  bool include_trunk, int obs_col, int y_col,
                                  int chosen, double coeff,
                                  GradientBuffer& out, Workspace& ws) const {
  forward_head(head, obs_col, y_col, ws.hidden, ws.logits);
  log_softmax_into(ws.logits, ws.lsm);

  // d log p[chosen] / d logits = onehot(chosen) - softmax(logits)
  ws.dz.resize(static_cast<std::size_t>(head.out));
  for (int o = 0; o < head.out; ++o)
    ws.dz[static_cast<std::size_t>(o)] =
        coeff * ((o == chosen ? 1.0 : 0.0) -
                 std::exp(ws.lsm[static_cast<std::size_t>(o)]));

  const double* w2 = params_.data() + head.w2;
  double* grad = out.values.data() + head_grad_offset;
  const std::size_t rel_b1 = head.b1 - head.w1;
  const std::size_t rel_w2 = head.w2 - head.w1;
  const std::size_t rel_b2 = head.b2 - head.w1;

  // Output layer, then backprop into the hidden activations.
  ws.gpre.assign(static_cast<std::size_t>(head.hidden), 0.0);
  for (int o = 0; o < head.out; ++o) {
    const double d = ws.dz[static_cast<std::size_t>(o)];
    grad[rel_b2 + o] += d;
    double* gw2_row = grad + rel_w2 + static_cast<std::size_t>(o) * head.hidden;
    const double* w2_row = w2 + static_cast<std::size_t>(o) * head.hidden;
    for (int h = 0; h < head.hidden; ++h) {
      gw2_row[h] += d * ws.hidden[static_cast<std::size_t>(h)];
      ws.gpre[static_cast<std::size_t>(h)] += d * w2_row[h];
    }
  }
  for (int h = 0; h < head.hidden; ++h) {
    const double a = ws.hidden[static_cast<std::size_t>(h)];
    ws.gpre[static_cast<std::size_t>(h)] *= 1.0 - a * a;
  }

  const int in = head.in;
  const int y_feature = cfg_.obs_feature_dim() + y_col;
  const double* w1 = params_.data() + head.w1;
  if (cfg_.trunk_dim > 0) {
    const int obs_dim = cfg_.obs_onehot_dim();
    const double* trunk = params_.data();
    for (int h = 0; h < head.hidden; ++h) {
      const double g = ws.gpre[static_cast<std::size_t>(h)];
      grad[rel_b1 + h] += g;
      grad[static_cast<std::size_t>(h) * in + y_feature] += g;
      double* gw1_row = grad + static_cast<std::size_t>(h) * in;
      const double* w1_row = w1 + static_cast<std::size_t>(h) * in;
      for (int k = 0; k < cfg_.trunk_dim; ++k)
        gw1_row[k] += g * trunk[k * obs_dim + obs_col];
      if (include_trunk) {
        for (int k = 0; k < cfg_.trunk_dim; ++k)
          out.values[static_cast<std::size_t>(k) * obs_dim + obs_col] +=
              g * w1_row[k];
      }
    }
  } else {
    for (int h = 0; h < head.hidden; ++h) {
      const double g = ws.gpre[static_cast<std::size_t>(h)];
      grad[rel_b1 + h] += g;
      grad[static_cast<std::size_t>(h) * in + obs_col] += g;
      grad[static_cast<std::size_t>(h) * in + y_feature] += g;
    }
  }
}

void JointPolicy::accumulate_logprob_grad(const Trajectory& traj,
                                          GradWhich which, double weight,
                                          GradientBuffer& out) const {
  if (out.values.size() != grad_size(which))
    throw ContractViolation("accumulate_logprob_grad: buffer size mismatch");

  const bool want_action = which != GradWhich::kInternalOnly;
  const bool want_internal = which != GradWhich::kActionOnly;
  const bool joint = which == GradWhich::kJoint;
  // Grad offsets of the head blocks inside the output buffer.
  const std::size_t action_offset = joint ? action_.w1 : 0;
  const std::size_t internal_offset = joint ? internal_.w1 : 0;
  const bool trunk_grads = joint && cfg_.trunk_dim > 0;

  Workspace ws;
  for (std::size_t t = 0; t < traj.steps.size(); ++t) {
    const StepRecord& step = traj.steps[t];
    validate_obs(step.obs, /*allow_null=*/false);
    if (step.internal.value < 0 ||
        step.internal.value >= cfg_.num_internal_states ||
        step.action.value < 0 || step.action.value >= cfg_.num_actions)
      throw ContractViolation("accumulate_logprob_grad: id out of range");

    if (want_action) {
      backward_factor(action_, action_offset, trunk_grads, step.obs.value,
                      step.internal.value, step.action.value, weight, out, ws);
    }
    if (want_internal && t > 0) {
      const StepRecord& prev = traj.steps[t - 1];
      backward_factor(internal_, internal_offset, trunk_grads, prev.obs.value,
                      prev.internal.value, step.internal.value, weight, out,
                      ws);
    }
  }
  out.num_samples += 1;
}

double JointPolicy::logprob_sum(const Trajectory& traj, GradWhich which) const {
  const bool want_action = which != GradWhich::kInternalOnly;
  const bool want_internal = which != GradWhich::kActionOnly;
  double total = 0.0;
  for (std::size_t t = 0; t < traj.steps.size(); ++t) {
    const StepRecord& step = traj.steps[t];
    if (want_action) {
      const auto lsm = log_softmax(action_logits(step.obs, step.internal));
      total += lsm[static_cast<std::size_t>(step.action.value)];
    }
    if (want_internal && t > 0) {
      const StepRecord& prev = traj.steps[t - 1];
      const auto lsm = log_softmax(internal_logits(prev.obs, prev.internal));
      total += lsm[static_cast<std::size_t>(step.internal.value)];
    }
  }
  return total;
}

bool JointPolicy::params_finite() const {
  for (double v : params_) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

std::string JointPolicy::checkpoint_json() const {
  nlohmann::json j;
  j["version"] = kCheckpointVersion;
  j["env"] = cfg_.env_name;
  j["num_observations"] = cfg_.num_observations;
  j["num_actions"] = cfg_.num_actions;
  j["num_internal_states"] = cfg_.num_internal_states;
  j["hidden_width"] = cfg_.hidden_width;
  j["trunk_dim"] = cfg_.trunk_dim;
  j["params"] = params_;
  return j.dump();
}

JointPolicy JointPolicy::from_checkpoint_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("bad checkpoint: ") + e.what());
  }
  for (const char* key :
       {"version", "env", "num_observations", "num_actions",
        "num_internal_states", "hidden_width", "trunk_dim", "params"}) {
    if (!j.contains(key))
      throw ConfigError(std::string("checkpoint missing key \"") + key + "\"");
  }
  if (j["version"].get<int>() != kCheckpointVersion)
    throw ConfigError("unsupported checkpoint version");

  PolicyConfig cfg;
  cfg.env_name = j["env"].get<std::string>();
  cfg.num_observations = j["num_observations"].get<int>();
  cfg.num_actions = j["num_actions"].get<int>();
  cfg.num_internal_states = j["num_internal_states"].get<int>();
  cfg.hidden_width = j["hidden_width"].get<int>();
  cfg.trunk_dim = j["trunk_dim"].get<int>();

  JointPolicy policy(cfg);
  const auto& params = j["params"];
  if (params.size() != policy.params_.size())
    throw ConfigError("checkpoint parameter count mismatch");
  for (std::size_t i = 0; i < policy.params_.size(); ++i)
    policy.params_[i] = params[i].get<double>();
  return policy;
}

void JointPolicy::save_checkpoint(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open checkpoint for writing: " + path);
  out << checkpoint_json() << '\n';
  if (!out) throw ConfigError("failed writing checkpoint: " + path);
}

JointPolicy JointPolicy::load_checkpoint(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open checkpoint: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return from_checkpoint_json(buffer.str());
}

GradientBuffer logprob_grad(const JointPolicy& policy, const Trajectory& traj,
                            GradWhich which) {
  GradientBuffer out(policy.grad_size(which));
  policy.accumulate_logprob_grad(traj, which, episodic_return(traj), out);
  return out;
}

}  // namespace istate_pg
