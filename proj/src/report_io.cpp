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

#include "odsim/report_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <system_error>

#include "json.hpp"
#include "odsim/config.hpp"
#include "odsim/errors.hpp"

namespace odsim {

namespace {

using nlohmann::ordered_json;

double finite(double value, std::string_view what) {
    if (!std::isfinite(value)) {
        throw NumericalDegeneracy("non-finite value in " + std::string(what));
    }
    return value;
}

std::string_view kind_name(Check::Kind kind) {
    switch (kind) {
        case Check::Kind::equal:
            return "equal";
        case Check::Kind::at_most:
            return "at_most";
        case Check::Kind::at_least:
            return "at_least";
    }
    return "equal";
}

}  // namespace

std::string format_number(double value) {
    char buf[64];
    const auto result = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
    return {buf, result.ptr};
}

std::string report_csv(const ScenarioReport& report) {
    std::string out;
    for (std::size_t i = 0; i < report.columns.size(); ++i) {
        out += (i ? "," : "") + report.columns[i];
    }
    out += '\n';
    for (const auto& row : report.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) {
                out += ',';
            }
            out += format_number(row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string summary_json(const ScenarioReport& report) {
    ordered_json doc;
    doc["tool_version"] = std::string(kToolVersion);
    doc["scenario"] = std::string(scenario_name(report.config.scenario));
    doc["config"] = ordered_json::parse(config_json(report.config));
    doc["conventions"] = {
        {"vacuum_quadrature_variance", 0.5},
        {"quadrature_order", "X1,P1,X2,P2"},
        {"squeezing_parameter", "r = artanh(epsilon) >= 0"},
        {"bogoliubov", "B = (a - eps b^dag)/alpha0, D = (b - eps a^dag)/alpha0"},
        {"units", "gamma12 = 1, sample length = 1"},
    };
    ordered_json terminal = ordered_json::object();
    for (const auto& [key, value] : report.terminal) {
        terminal[key] = finite(value, key);
    }
    doc["terminal"] = terminal;
    ordered_json checks = ordered_json::array();
    for (const auto& c : report.checks) {
        checks.push_back({{"name", c.name},
                          {"kind", std::string(kind_name(c.kind))},
                          {"value", finite(c.value, c.name)},
                          {"expected", finite(c.expected, c.name)},
                          {"delta", finite(c.delta(), c.name)},
                          {"tolerance", c.tolerance},
                          {"pass", c.pass()}});
    }
    doc["checks"] = checks;
    doc["oracle_delta"] = finite(report.max_oracle_delta(), "oracle_delta");
    doc["pass"] = report.passed();
    doc["notes"] = report.notes;
    for (const auto& row : report.rows) {
        for (double v : row) {
            finite(v, "report rows");
        }
    }
    return doc.dump(2) + "\n";
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw ConfigError("cannot write '" + tmp.string() + "'");
        }
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) {
            throw ConfigError("write to '" + tmp.string() + "' failed");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw ConfigError("cannot move output into place at '" + path.string() + "'");
    }
}

}  // namespace odsim
