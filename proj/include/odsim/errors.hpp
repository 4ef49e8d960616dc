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

#include <stdexcept>
#include <string>

namespace odsim {

/// Malformed request: unknown or duplicate mode labels, bad partitions, shape mismatches.
class InvalidInput : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A physical parameter outside its admissible range (e.g. epsilon >= 1, |tau| > 1).
class UnphysicalParameter : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Parameters that are physical but outside the regime the model covers (|g_b| >= |g_a|).
class UnsupportedRegime : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Evaluation at a pole of a closed form.
class SingularInput : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

class NumericalDegeneracy : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A state produced mid-run violated the uncertainty principle beyond tolerance.
class PhysicalityViolation : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Bad configuration file or override.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace odsim
