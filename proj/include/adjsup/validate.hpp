// Copyright 2026 The adjsup Authors
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

#ifndef ADJSUP_VALIDATE_HPP
#define ADJSUP_VALIDATE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace adjsup {

struct ValidateOptions {
    unsigned max_n = 3;
    std::uint64_t mc_trials = 200000;
    std::uint64_t mc_seed = 42;
    /// Run the sparse path through corrupted_channels(); negative control.
    bool inject_fault = false;
};

struct ValidationCheck {
    std::string group;
    std::string point;
    bool passed;
    std::string detail;
};

struct ValidationSummary {
    std::vector<ValidationCheck> checks;
    bool passed = true;
    std::size_t failures = 0;

    /// Null when everything passed.
    const ValidationCheck *first_failure() const;
    std::string to_text() const;
};

/// Dense-oracle comparison grid, simulation-versus-closed-form grid and Monte
/// Carlo spot checks.
ValidationSummary validate(const ValidateOptions &options);

}  // namespace adjsup

#endif
