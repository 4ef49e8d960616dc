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
#include <string_view>

#include "odsim/scenarios.hpp"

namespace odsim {

/// Parse a JSON scenario configuration.
///
/// The document is a flat object with a required `scenario` string; every other field
/// (epsilon, kappa_L, omega_over_gamma_list, z_steps, beta_norm, input_state, alpha_B_re,
/// alpha_B_im, alpha_D_re, alpha_D_im) is optional and defaults per scenario. Unknown keys
/// are errors. Each override is `key=value` and replaces the field before parsing; the
/// value may be any JSON literal, a bare string, or a comma-separated number list.
/// Throws ConfigError.
ScenarioConfig parse_config(std::string_view json_text, std::span<const std::string> overrides = {});

ScenarioConfig load_config(const std::filesystem::path& path, std::span<const std::string> overrides = {});

/// Canonical JSON rendering of a configuration (stable key order).
std::string config_json(const ScenarioConfig& config);

}  // namespace odsim
