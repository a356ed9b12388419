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

// JSON result files. Top-level keys, in order: settings, summary, stats and
// (when the sweep kept them) details. Undefined ratios are null; numbers are
// written with round-trip precision.

#ifndef QSWEEP_RESULT_IO_HPP_
#define QSWEEP_RESULT_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "qsweep/sweep.hpp"

namespace qsweep {

std::string to_json(const SweepResult& result);

// Throws DataError on malformed or incomplete documents.
SweepResult from_json(std::string_view text);

// Throws IoError when the file cannot be written or read.
void export_result(const SweepResult& result, const std::filesystem::path& path);
SweepResult import_result(const std::filesystem::path& path);

}  // namespace qsweep

#endif  // QSWEEP_RESULT_IO_HPP_
