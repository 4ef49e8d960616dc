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
#include <span>
#include <string>
#include <vector>

namespace odsim {

struct RunManifest {
    std::filesystem::path config_path;
    std::filesystem::path output_dir;
    std::vector<std::string> files;
    std::string tool_version;
    double duration_seconds = 0.0;
    bool pass = false;
};

/// Load the configuration, run its scenario and write `<scenario>.csv`, `summary.json`
/// and `manifest.json` into output_dir (created if missing).
///
/// Throws ConfigError for bad configs or unwritable output and PhysicalityViolation when a
/// state becomes unphysical mid-run.
RunManifest run(const std::filesystem::path& config_path, const std::filesystem::path& output_dir,
                std::span<const std::string> overrides, unsigned threads = 0);

/// One line per scenario, or a JSON array of names when `json` is set.
std::string list_scenarios(bool json);

}  // namespace odsim
