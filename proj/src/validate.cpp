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

#include "adjsup/validate.hpp"

#include <cmath>
#include <sstream>

#include "adjsup/analytic.hpp"
#include "adjsup/dm_oracle.hpp"
#include "adjsup/montecarlo.hpp"
#include "adjsup/protocol.hpp"

namespace adjsup {

namespace {

constexpr double kOracleP[] = {0.0, 0.1, 0.5, 0.9, 1.0};
constexpr unsigned kOracleK[] = {1, 2, 3, 5};
constexpr double kAnalyticP[] = {0.0, 0.1, 0.25, 0.5, 0.75, 0.9, 1.0};
constexpr unsigned kAnalyticMaxN = 6;
constexpr unsigned kAnalyticMaxK = 20;
constexpr double kSigmas = 5.0;

std::string fmt(double v) {
    std::ostringstream out;
    out.precision(17);
    out << v;
    return out.str();
}

}  // namespace

const ValidationCheck *ValidationSummary::first_failure() const {
    for (const auto &check : checks) {
        if (!check.passed) {
            return &check;
        }
    }
    return nullptr;
}

std::string ValidationSummary::to_text() const {
    std::ostringstream out;
    std::string group;
    std::size_t in_group = 0;
    std::size_t failed_in_group = 0;
    auto flush = [&] {
        if (!group.empty()) {
            out << group << ": " << (in_group - failed_in_group) << "/" << in_group << " passed\n";
        }
    };
    for (const auto &check : checks) {
        if (check.group != group) {
            flush();
            group = check.group;
            in_group = 0;
            failed_in_group = 0;
        }
        ++in_group;
        failed_in_group += check.passed ? 0 : 1;
    }
    flush();
    if (const ValidationCheck *bad = first_failure()) {
        out << "FAIL first failing tuple: [" << bad->group << "] " << bad->point << ": " << bad->detail << "\n";
    } else {
        out << "PASS all " << checks.size() << " checks\n";
    }
    return out.str();
}

ValidationSummary validate(const ValidateOptions &options) {
    if (options.max_n < 1 || options.max_n > dm::kMaxOracleQubits) {
        throw ConfigError("max-n must be in [1, " + std::to_string(dm::kMaxOracleQubits) + "]");
    }
    const ChannelSet channels = options.inject_fault ? corrupted_channels() : ChannelSet{};
    ValidationSummary summary;
    auto record = [&](std::string group, std::string point, bool passed, std::string detail) {
        summary.checks.push_back({std::move(group), std::move(point), passed, std::move(detail)});
        if (!passed) {
            summary.passed = false;
            ++summary.failures;
        }
    };

    for (unsigned n = 1; n <= options.max_n; ++n) {
        for (double p : kOracleP) {
            for (unsigned k : kOracleK) {
                SchemeParams params(n, p, k, 1);
                dm::CompareReport report = dm::compare(params, channels);
                record("dm-oracle", describe(params), report.passed, report.detail);
            }
        }
    }

    std::vector<SchemeParams> grid;
    for (unsigned n = 1; n <= kAnalyticMaxN; ++n) {
        for (double p : kAnalyticP) {
            for (unsigned k = 1; k <= kAnalyticMaxK; ++k) {
                grid.emplace_back(n, p, k, 1);
            }
        }
    }
    std::vector<SweepItem> results = sweep(grid, 0, channels);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const std::string point = describe(grid[i]);
        if (const auto *err = std::get_if<std::string>(&results[i])) {
            record("analytic", point, false, *err);
            continue;
        }
        VerifyReport report = verify_against_analytic(std::get<SchemeResult>(results[i]));
        record(
            "analytic", point, report.passed,
            "error rel dev " + fmt(report.error_rate.rel_dev) + ", survival rel dev " + fmt(report.survival.rel_dev));
    }

    const SchemeParams mc_points[] = {SchemeParams(2, 0.5, 3, 1), SchemeParams(1, 0.5, 2, 1)};
    for (const SchemeParams &params : mc_points) {
        MCEstimate est = estimate(params, options.mc_trials, options.mc_seed);
        AnalyticPoint point = analytic_point(params.n_qubits(), params.p(), params.k());
        double survival_z = std::abs(est.survival_freq - (1.0 - point.zeta)) / est.stderr_survival;
        double error_z = est.error_freq_conditional
                             ? std::abs(*est.error_freq_conditional - point.epsilon) / *est.stderr_error
                             : INFINITY;
        record(
            "montecarlo", describe(params) + " seed=" + std::to_string(options.mc_seed),
            survival_z < kSigmas && error_z < kSigmas,
            "survival z=" + fmt(survival_z) + ", error z=" + fmt(error_z));
    }
    return summary;
}

}  // namespace adjsup
