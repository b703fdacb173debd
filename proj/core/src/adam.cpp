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

#include "istate_pg/adam.hpp"

#include <cmath>

#include "istate_pg/errors.hpp"

namespace istate_pg {

void adam_update(std::span<double> params, std::span<const double> grad,
                 double step_size, AdamState& state,
                 const AdamOptions& options) {
  if (grad.size() != params.size())
    throw ContractViolation("adam_update: gradient size mismatch");
  if (state.m.empty()) state = AdamState(params.size());
  if (state.m.size() != params.size())
    throw ContractViolation("adam_update: state size mismatch");

  for (double g : grad) {
    if (!std::isfinite(g))
      throw NumericalError("adam_update: non-finite gradient");
  }

  state.step_count += 1;
  const double b1 = options.beta1;
  const double b2 = options.beta2;
  const double correction1 =
      1.0 - std::pow(b1, static_cast<double>(state.step_count));
  const double correction2 =
      1.0 - std::pow(b2, static_cast<double>(state.step_count));

  for (std::size_t i = 0; i < params.size(); ++i) {
    const double g = grad[i];
    state.m[i] = b1 * state.m[i] + (1.0 - b1) * g;
    state.v[i] = b2 * state.v[i] + (1.0 - b2) * g * g;
    const double m_hat = state.m[i] / correction1;
    const double v_hat = state.v[i] / correction2;
    params[i] += step_size * m_hat / (std::sqrt(v_hat) + options.epsilon);
  }
}

}  // namespace istate_pg
