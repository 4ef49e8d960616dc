// Copyright 2026 The odsim Authors
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

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "odsim/scenarios.hpp"

namespace odsim {

inline constexpr std::string_view kToolVersion = "0.1.0";

/// Shortest-free, locale-free rendering with 17 significant digits.
std::string format_number(double value);

/// Header row plus one line per report row; `.` decimals, LF line endings.
std::string report_csv(const ScenarioReport& report);

/// Terminal observables, oracle checks and pass flags as JSON. Deterministic for a given report.
/// Throws NumericalDegeneracy if any number is not finite.
std::string summary_json(const ScenarioReport& report);

/// Write to a sibling temporary file, then rename over the target. Throws ConfigError on failure.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace odsim
