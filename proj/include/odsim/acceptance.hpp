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

#include <string>
#include <vector>

namespace odsim::acceptance {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    /// Largest engine-vs-reference discrepancy relative to its own tolerance (<= 1 passes).
    double worst_ratio = 0.0;
    /// One line per sub-check: value, expected, tolerance.
    std::vector<std::string> details;
};

struct Options {
    unsigned threads = 0;
    /// Multiplies the optical depth fed to the engine (the references keep the nominal value).
    double kappa_scale = 1.0;
    /// Run the thread-count determinism criterion (re-runs every other criterion twice).
    bool determinism = true;
};

/// Every end-to-end criterion of the simulator, in order.
std::vector<CriterionResult> run_all(const Options& options = {});

/// Fixed-width table, one PASS/FAIL line per criterion; with `verbose` each sub-check follows.
std::string format(const std::vector<CriterionResult>& results, bool verbose);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace odsim::acceptance
