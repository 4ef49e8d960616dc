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

// odsim: run dark-state propagation scenarios, list them, or run the acceptance sweep.

#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "odsim/acceptance.hpp"
#include "odsim/errors.hpp"
#include "odsim/runner.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kConfigError = 2;
constexpr int kPhysicality = 3;

int run_command(const std::string& config, const std::string& out, const std::vector<std::string>& overrides) {
    try {
        const auto manifest = odsim::run(config, out, overrides);
        for (const auto& f : manifest.files) {
            std::cout << (manifest.output_dir / f).string() << "\n";
        }
        std::cout << (manifest.pass ? "pass" : "checks failed (see summary.json)") << "\n";
        return kOk;
    } catch (const odsim::PhysicalityViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kPhysicality;
    } catch (const odsim::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConfigError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConfigError;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailed;
    }
}

int verify_command(bool verbose, double kappa_scale) {
    odsim::acceptance::Options options;
    options.kappa_scale = kappa_scale;
    const auto results = odsim::acceptance::run_all(options);
    std::cout << odsim::acceptance::format(results, verbose);
    if (odsim::acceptance::all_passed(results)) {
        return kOk;
    }
    for (const auto& r : results) {
        if (!r.pass) {
            std::cerr << "failed: C" << r.id << " " << r.name << "\n";
        }
    }
    return kFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-mode light in Raman-coupled Lambda media: Gaussian propagation scenarios"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "run one scenario and write CSV + JSON results");
    std::string config_path;
    std::string out_dir;
    std::vector<std::string> overrides;
    run->add_option("--config", config_path, "JSON scenario configuration")->required();
    run->add_option("--out", out_dir, "output directory")->required();
    run->add_option("--override", overrides, "key=value replacing a configuration field")->take_all();

    auto* list = app.add_subcommand("list", "list available scenarios");
    bool list_json = false;
    list->add_flag("--json", list_json, "print a JSON array of scenario names");

    auto* verify = app.add_subcommand("verify", "run the acceptance sweep against the closed forms");
    bool verbose = false;
    double kappa_scale = 1.0;
    verify->add_flag("--verbose,-v", verbose, "print every sub-check");
    verify->add_option("--perturb-kappa", kappa_scale, "scale the optical depth seen by the engine (sensitivity check)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help();
        return kConfigError;
    }

    if (*run) {
        return run_command(config_path, out_dir, overrides);
    }
    if (*list) {
        std::cout << odsim::list_scenarios(list_json);
        return kOk;
    }
    return verify_command(verbose, kappa_scale);
}
