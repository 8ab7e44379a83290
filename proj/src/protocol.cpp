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

#include "adjsup/protocol.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "adjsup/analytic.hpp"

namespace adjsup {

CycleRecord summarize(const DiagonalState &state, const SchemeParams &params, unsigned applications) {
    CycleRecord rec{applications, 0.0, 0.0, 0.0};
    for (const auto &[at, w] : state.weights()) {
        if (at.output == params.marked()) {
            rec.correct_weight += w;
        } else {
            rec.wrong_weight += w;
        }
    }
    rec.survival = rec.correct_weight + rec.wrong_weight;
    return rec;
}

SchemeResult run_scheme(const SchemeParams &params, const ChannelSet &channels) {
    DiagonalState state = initial_state(params.n_qubits());
    state = channels.forward_qa(state, params);
    state = channels.cnot2(state);

    std::vector<CycleRecord> trace;
    trace.reserve(params.k());
    trace.push_back(summarize(state, params, 1));
    std::optional<unsigned> all_absorbed_at;
    for (unsigned t = 2; t <= params.k(); ++t) {
        state = channels.adjoint_and_absorb(state, params);
        state = channels.cnot1(state);
        trace.push_back(summarize(state, params, t));
        if (!all_absorbed_at && state.size() == 0) {
            all_absorbed_at = t;
        }
    }

    // Summed from the surviving entries rather than 1 - absorbed so deep-tail
    // survival keeps its relative precision.
    double survival = trace.back().survival;
    std::optional<double> error_rate;
    if (!all_absorbed_at) {
        double wrong = 0.0;
        for (const auto &[label, w] : conditional_distribution(state, Register::Output)) {
            if (label != params.marked()) {
                wrong += w;
            }
        }
        error_rate = wrong;
    }
    return SchemeResult{
        params, std::move(state), survival, error_rate, all_absorbed_at, std::move(trace),
    };
}

namespace {

AnalyticDeviation deviation(double simulated, double analytic, bool underflow) {
    AnalyticDeviation d{simulated, analytic, std::abs(simulated - analytic), 0.0, false};
    if (d.abs_dev == 0.0) {
        d.rel_dev = 0.0;
    } else if (analytic == 0.0) {
        d.rel_dev = std::numeric_limits<double>::infinity();
    } else {
        d.rel_dev = d.abs_dev / std::abs(analytic);
    }
    d.passed = d.rel_dev <= kVerifyRelTol || (underflow && d.abs_dev <= kVerifyAbsTolUnderflow);
    return d;
}

}  // namespace

VerifyReport verify_against_analytic(const SchemeResult &result) {
    const auto &params = result.params;
    AnalyticPoint point = analytic_point(params.n_qubits(), params.p(), params.k());
    auto underflows = [](double log_w) {
        return std::isfinite(log_w) && std::exp(log_w) < std::numeric_limits<double>::min();
    };
    bool underflow = underflows(point.log_correct_weight) || underflows(point.log_wrong_weight_total);

    VerifyReport report{};
    report.underflow = underflow;
    report.survival = deviation(result.survival, point.survival, underflow);
    if (result.error_rate) {
        report.error_rate = deviation(*result.error_rate, point.epsilon, underflow);
    } else {
        // Undefined error rate is acceptable only if the analytic survival is lost to underflow.
        report.error_rate = {std::numeric_limits<double>::quiet_NaN(), point.epsilon, 0.0, 0.0, underflow};
    }
    report.passed = report.survival.passed && report.error_rate.passed;
    return report;
}

std::vector<SweepItem> sweep(std::span<const SchemeParams> grid, unsigned threads, const ChannelSet &channels) {
    std::vector<SweepItem> out(grid.size(), SweepItem{std::string{}});
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(grid.size(), 1)));

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < grid.size(); i = next++) {
            try {
                out[i] = run_scheme(grid[i], channels);
            } catch (const std::exception &e) {
                out[i] = std::string(e.what());
            }
        }
    };
    if (threads <= 1) {
        worker();
        return out;
    }
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back(worker);
    }
    pool.clear();
    return out;
}

}  // namespace adjsup
