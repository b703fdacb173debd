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

#ifndef ISTATE_PG_ADAM_HPP_
#define ISTATE_PG_ADAM_HPP_

#include <cstdint>
#include <span>
#include <vector>

namespace istate_pg {

struct AdamOptions {
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

struct AdamState {
  std::vector<double> m;
  std::vector<double> v;
  std::int64_t step_count = 0;

  AdamState() = default;
  explicit AdamState(std::size_t n) : m(n, 0.0), v(n, 0.0) {}
};

// One Adam ascent step (the objective is maximized):
//   m <- b1 m + (1-b1) g,  v <- b2 v + (1-b2) g^2
//   param += step_size * m_hat / (sqrt(v_hat) + eps)
// with the usual bias corrections. Adam is elementwise, so updating a
// concatenated vector with one state equals updating its blocks with
// independent states. Throws NumericalError on a non-finite gradient.
void adam_update(std::span<double> params, std::span<const double> grad,
                 double step_size, AdamState& state,
                 const AdamOptions& options = {});

}  // namespace istate_pg

#endif  // ISTATE_PG_ADAM_HPP_
