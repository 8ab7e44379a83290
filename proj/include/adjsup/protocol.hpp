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

#ifndef ADJSUP_PROTOCOL_HPP
#define ADJSUP_PROTOCOL_HPP

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "adjsup/channels.hpp"
#include "adjsup/state.hpp"

namespace adjsup {

/// Snapshot after `applications` total runs of the algorithm or its adjoint.
struct CycleRecord {
    unsigned applications;
    double survival;
    double correct_weight;
    double wrong_weight;
};

struct SchemeResult {
    SchemeParams params;
    DiagonalState final_state;
    double survival;
    /// Empty when nothing survived.
    std::optional<double> error_rate;
    /// Set to the application count at which survival first hit exactly 0.
    std::optional<unsigned> all_absorbed_at;
    std::vector<CycleRecord> per_cycle;
};

/// Forward QA and CNOT2, then k-1 rounds of adjoint+ABSORB and CNOT1. The
/// answer is read from register 1.
SchemeResult run_scheme(const SchemeParams &params, const ChannelSet &channels = {});

/// Builds the result fields (survival, error rate, cycle record) common to
/// every simulation path from a state in which both registers agree.
CycleRecord summarize(const DiagonalState &state, const SchemeParams &params, unsigned applications);

struct AnalyticDeviation {
    double simulated;
    double analytic;
    double abs_dev;
    double rel_dev;
    bool passed;
};

struct VerifyReport {
    AnalyticDeviation error_rate;
    AnalyticDeviation survival;
    bool underflow;
    bool passed;
};

inline constexpr double kVerifyRelTol = 1e-12;
inline constexpr double kVerifyAbsTolUnderflow = 1e-9;

/// Compares a simulated result with the closed forms. A value passes when its
/// relative deviation is at most 1e-12, or, for points where a raw branch
/// weight underflows double precision, when its absolute deviation is at most
/// 1e-9.
VerifyReport verify_against_analytic(const SchemeResult &result);

using SweepItem = std::variant<SchemeResult, std::string>;

/// Runs every grid point independently, concurrently when `threads` != 1
/// (0 picks the hardware concurrency). Output order matches the input order;
/// a failing point yields its error message instead of aborting.
std::vector<SweepItem> sweep(
    std::span<const SchemeParams> grid, unsigned threads = 0, const ChannelSet &channels = {});

}  // namespace adjsup

#endif
