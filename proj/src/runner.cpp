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

#include "odsim/runner.hpp"

#include <chrono>
#include <system_error>

#include "json.hpp"
#include "odsim/config.hpp"
#include "odsim/errors.hpp"
#include "odsim/report_io.hpp"
#include "odsim/scenarios.hpp"

namespace odsim {

RunManifest run(const std::filesystem::path& config_path, const std::filesystem::path& output_dir,
                std::span<const std::string> overrides, unsigned threads) {
    const auto start = std::chrono::steady_clock::now();
    const ScenarioConfig config = load_config(config_path, overrides);

    std::error_code ec;
    std::filesystem::create_directories(output_dir, ec);
    if (ec || !std::filesystem::is_directory(output_dir)) {
        throw ConfigError("cannot create output directory '" + output_dir.string() + "'");
    }

    const ScenarioReport report = run_scenario(config, threads);
    const std::string csv_name = std::string(scenario_name(config.scenario)) + ".csv";
    const std::string summary = summary_json(report);
    write_file_atomic(output_dir / csv_name, report_csv(report));
    write_file_atomic(output_dir / "summary.json", summary);

    RunManifest manifest;
    manifest.config_path = config_path;
    manifest.output_dir = output_dir;
    manifest.files = {csv_name, "summary.json", "manifest.json"};
    manifest.tool_version = std::string(kToolVersion);
    manifest.pass = report.passed();
    manifest.duration_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    nlohmann::ordered_json doc;
    doc["config_path"] = manifest.config_path.string();
    doc["output_dir"] = manifest.output_dir.string();
    doc["files"] = manifest.files;
    doc["conventions"] = {{"vacuum_quadrature_variance", 0.5}, {"squeezing_parameter", "r = artanh(epsilon) >= 0"}};
    doc["tool_version"] = manifest.tool_version;
    doc["duration_seconds"] = manifest.duration_seconds;
    doc["pass"] = manifest.pass;
    write_file_atomic(output_dir / "manifest.json", doc.dump(2) + "\n");
    return manifest;
}

std::string list_scenarios(bool json) {
    if (json) {
        nlohmann::json names = nlohmann::json::array();
        for (const auto& info : scenario_catalog()) {
            names.push_back(std::string(info.name));
        }
        return names.dump() + "\n";
    }
    std::string out;
    for (const auto& info : scenario_catalog()) {
        out += std::string(info.name) + "\t" + std::string(info.description) + " [" + std::string(info.anchor) + "]\n";
    }
    return out;
}

}  // namespace odsim
