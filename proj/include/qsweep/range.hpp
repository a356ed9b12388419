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

// Threshold ranges written as LO:HI[:STEP] (inclusive, step 1 by default)
// or as a single value.

#ifndef QSWEEP_RANGE_HPP_
#define QSWEEP_RANGE_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsweep/data.hpp"

namespace qsweep {

inline constexpr std::size_t kMaxRangeSize = 100000;

// lo, lo + step, lo + 2*step, ... up to hi (with a small tolerance so that
// 0.1:0.3:0.1 yields three values). Throws DataError on step <= 0, lo > hi,
// or more than kMaxRangeSize values.
std::vector<double> expand_range(double lo, double hi, double step = 1.0);

// Throws DataError on malformed text.
std::vector<double> parse_range(std::string_view text);

// Inverse of parse_range: text that parses back to exactly `values`, or
// nullopt when the values are not such a progression.
std::optional<std::string> format_range(const std::vector<double>& values);

// "A=2:3,B=2" -> axes in the given order.
std::vector<GridAxis> parse_axes(std::string_view text);
std::optional<std::string> format_axes(const std::vector<GridAxis>& axes);

// "A=2,B=2"
ThresholdAssignment parse_assignment(std::string_view text);
std::string format_assignment(const ThresholdAssignment& assignment);

}  // namespace qsweep

#endif  // QSWEEP_RANGE_HPP_
