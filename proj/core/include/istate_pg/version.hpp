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

#ifndef ISTATE_PG_VERSION_HPP_
#define ISTATE_PG_VERSION_HPP_

#include <string_view>

namespace istate_pg {

inline constexpr std::string_view kVersionString = "0.1.0";

// Format version of policy checkpoint files.
inline constexpr int kCheckpointVersion = 1;

}  // namespace istate_pg

#endif  // ISTATE_PG_VERSION_HPP_
