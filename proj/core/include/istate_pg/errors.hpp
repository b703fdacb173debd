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

#ifndef ISTATE_PG_ERRORS_HPP_
#define ISTATE_PG_ERRORS_HPP_

#include <stdexcept>

namespace istate_pg {

// Bad user input: config files, CLI values, malformed checkpoints.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Non-finite parameters or gradients encountered during training.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// API misuse: stepping a finished episode, ids out of range.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace istate_pg

#endif  // ISTATE_PG_ERRORS_HPP_
