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

#ifndef QSWEEP_FORMAT_HPP_
#define QSWEEP_FORMAT_HPP_

#include <optional>
#include <string>
#include <string_view>

namespace qsweep {

// Shortest decimal text that parses back to the same double ("7", "0.5").
std::string format_number(double value);

// Three decimals, ties rounded away from zero ("0.906"); "NA" when absent.
std::string format_fit(std::optional<double> value);

// Strict parse of a finite real; nullopt on anything else (including
// surrounding garbage, "nan", "inf").
std::optional<double> parse_number(std::string_view text);

std::string_view trim(std::string_view text);

}  // namespace qsweep

#endif  // QSWEEP_FORMAT_HPP_
