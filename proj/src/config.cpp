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

#include "odsim/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "odsim/errors.hpp"

namespace odsim {

namespace {

using nlohmann::json;

const std::set<std::string> kKnownKeys{
    "scenario", "epsilon", "kappa_L", "omega_over_gamma_list", "z_steps", "beta_norm", "input_state",
    "alpha_B_re", "alpha_B_im", "alpha_D_re", "alpha_D_im"};

std::string valid_scenarios() {
    std::string out;
    for (const auto& info : scenario_catalog()) {
        out += out.empty() ? "" : ", ";
        out += info.name;
    }
    return out;
}

json override_value(const std::string& text) {
    if (auto parsed = json::parse(text, nullptr, false); !parsed.is_discarded()) {
        return parsed;
    }
    if (text.find(',') != std::string::npos) {
        json list = json::array();
        std::stringstream in(text);
        std::string item;
        while (std::getline(in, item, ',')) {
            auto value = json::parse(item, nullptr, false);
            if (value.is_discarded() || !value.is_number()) {
                throw ConfigError("cannot parse list element '" + item + "'");
            }
            list.push_back(value);
        }
        return list;
    }
    return text;
}

double number(const json& doc, const char* key) {
    const auto& v = doc.at(key);
    if (!v.is_number()) {
        throw ConfigError(std::string(key) + " must be a number");
    }
    return v.get<double>();
}

}  // namespace

ScenarioConfig parse_config(std::string_view json_text, std::span<const std::string> overrides) {
    json doc = json::parse(json_text, nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) {
        throw ConfigError("configuration must be a JSON object");
    }
    for (const auto& item : overrides) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw ConfigError("override '" + item + "' is not of the form key=value");
        }
        doc[item.substr(0, eq)] = override_value(item.substr(eq + 1));
    }
    for (const auto& [key, value] : doc.items()) {
        if (!kKnownKeys.contains(key)) {
            throw ConfigError("unknown configuration key '" + key + "'");
        }
    }
    if (!doc.contains("scenario") || !doc["scenario"].is_string()) {
        throw ConfigError("missing 'scenario' string; valid scenarios: " + valid_scenarios());
    }
    const auto kind = parse_scenario(doc["scenario"].get<std::string>());
    if (!kind) {
        throw ConfigError("unknown scenario '" + doc["scenario"].get<std::string>() +
                          "'; valid scenarios: " + valid_scenarios());
    }
    ScenarioConfig config = ScenarioConfig::defaults_for(*kind);
    if (doc.contains("epsilon")) {
        config.epsilon = number(doc, "epsilon");
    }
    if (doc.contains("kappa_L")) {
        config.kappa_L = number(doc, "kappa_L");
    }
    if (doc.contains("beta_norm")) {
        config.beta_norm = number(doc, "beta_norm");
    }
    if (doc.contains("z_steps")) {
        const auto& v = doc["z_steps"];
        if (!v.is_number_integer() || v.get<long long>() < 0) {
            throw ConfigError("z_steps must be a non-negative integer");
        }
        config.z_steps = v.get<std::size_t>();
    }
    if (doc.contains("omega_over_gamma_list")) {
        const auto& v = doc["omega_over_gamma_list"];
        config.omega_over_gamma_list.clear();
        if (v.is_number()) {
            config.omega_over_gamma_list.push_back(v.get<double>());
        } else if (v.is_array()) {
            for (const auto& w : v) {
                if (!w.is_number()) {
                    throw ConfigError("omega_over_gamma_list must contain numbers");
                }
                config.omega_over_gamma_list.push_back(w.get<double>());
            }
        } else {
            throw ConfigError("omega_over_gamma_list must be a number or an array of numbers");
        }
    }
    if (doc.contains("input_state")) {
        const auto& v = doc["input_state"];
        const auto input = v.is_string() ? parse_input(v.get<std::string>()) : std::nullopt;
        if (!input) {
            throw ConfigError("input_state must be one of vacuum, tmsv, coherent");
        }
        config.input_state = *input;
    }
    const auto amp = [&](const char* re, const char* im) {
        return std::complex<double>(doc.contains(re) ? number(doc, re) : 0.0, doc.contains(im) ? number(doc, im) : 0.0);
    };
    config.alpha_B = amp("alpha_B_re", "alpha_B_im");
    config.alpha_D = amp("alpha_D_re", "alpha_D_im");
    validate(config);
    return config;
}

ScenarioConfig load_config(const std::filesystem::path& path, std::span<const std::string> overrides) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot read configuration file '" + path.string() + "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str(), overrides);
}

std::string config_json(const ScenarioConfig& config) {
    json doc = json::object();
    doc["scenario"] = std::string(scenario_name(config.scenario));
    doc["epsilon"] = config.epsilon;
    doc["kappa_L"] = config.kappa_L;
    doc["omega_over_gamma_list"] = config.omega_over_gamma_list;
    doc["z_steps"] = config.z_steps;
    doc["beta_norm"] = config.beta_norm;
    doc["input_state"] = std::string(input_name(config.input_state));
    doc["alpha_B_re"] = config.alpha_B.real();
    doc["alpha_B_im"] = config.alpha_B.imag();
    doc["alpha_D_re"] = config.alpha_D.real();
    doc["alpha_D_im"] = config.alpha_D.imag();
    return doc.dump();
}

}  // namespace odsim
