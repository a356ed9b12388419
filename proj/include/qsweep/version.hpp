// Copyright 2026 The qsweep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QSWEEP_VERSION_HPP_
#define QSWEEP_VERSION_HPP_

#include <string_view>

namespace qsweep {

inline constexpr std::string_view kVersion = "0.1.0";

}  // namespace qsweep

#endif  // QSWEEP_VERSION_HPP_
