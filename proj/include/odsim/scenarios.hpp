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

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace odsim {

enum class ScenarioKind { preservation, single_sample, cascade, gem, memory_swap };
enum class InputKind { vacuum, tmsv, coherent };

/// All scenarios run in units where gamma12 = 1 and each sample has length 1, so kappa = kappa_L
/// and omega is given in units of gamma12.
struct ScenarioConfig {
    ScenarioKind scenario = ScenarioKind::preservation;
    double epsilon = 0.5;
    double kappa_L = 10.0;
    std::vector<double> omega_over_gamma_list{0.0};
    std::size_t z_steps = 200;
    double beta_norm = 5.0;  // kappa gamma12 / beta, gradient scenario only
    InputKind input_state = InputKind::tmsv;
    // Coherent amplitudes of the bright and dark Bogoliubov modes on top of the (B, D) vacuum.
    std::complex<double> alpha_B{};
    std::complex<double> alpha_D{};

    /// Defaults appropriate for `kind` (optical depth, grid size, input state).
    static ScenarioConfig defaults_for(ScenarioKind kind);
};

/// Throws ConfigError when a field is out of range.
void validate(const ScenarioConfig& config);

struct ScenarioInfo {
    ScenarioKind kind;
    std::string_view name;
    std::string_view description;
    std::string_view anchor;
};

/// The five scenarios in stable order.
const std::vector<ScenarioInfo>& scenario_catalog();
std::string_view scenario_name(ScenarioKind kind);
std::optional<ScenarioKind> parse_scenario(std::string_view name);
std::string_view input_name(InputKind kind);
std::optional<InputKind> parse_input(std::string_view name);

/// Engine value compared with its closed-form expectation.
struct Check {
    enum class Kind { equal, at_most, at_least };

    std::string name;
    double value = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    Kind kind = Kind::equal;

    double delta() const { return value - expected; }
    bool pass() const;
};

struct ScenarioReport {
    ScenarioConfig config;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<std::pair<std::string, double>> terminal;
    std::vector<Check> checks;
    std::vector<std::string> notes;

    /// Throws std::out_of_range for an unknown column.
    std::vector<double> column(std::string_view name) const;
    std::optional<double> terminal_value(std::string_view name) const;
    bool passed() const;
    /// Largest |delta| over equality checks (0 when there are none).
    double max_oracle_delta() const;
};

/// Columns of the propagation scenarios, in report order.
const std::vector<std::string>& propagation_columns();

ScenarioReport run_preservation(const ScenarioConfig& config, unsigned threads = 0);
ScenarioReport run_single_sample(const ScenarioConfig& config, unsigned threads = 0);
ScenarioReport run_cascade(const ScenarioConfig& config, unsigned threads = 0);
ScenarioReport run_gem(const ScenarioConfig& config, unsigned threads = 0);
ScenarioReport run_memory_swap(const ScenarioConfig& config, unsigned threads = 0);
ScenarioReport run_scenario(const ScenarioConfig& config, unsigned threads = 0);

}  // namespace odsim
