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

#include "adjsup/adjsup.h"

#include <cmath>
#include <exception>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "adjsup/analytic.hpp"
#include "adjsup/dm_oracle.hpp"
#include "adjsup/montecarlo.hpp"
#include "adjsup/protocol.hpp"
#include "adjsup/validate.hpp"

struct adjsup_params {
    adjsup::SchemeParams value;
};

struct adjsup_result {
    adjsup::SchemeResult value;
    std::vector<std::pair<adjsup::LabelPair, double>> entries;
};

struct adjsup_mc {
    adjsup::MCEstimate value;
    std::vector<std::pair<adjsup::BasisLabel, std::uint64_t>> histogram;
};

struct adjsup_validation {
    adjsup::ValidationSummary value;
    std::string text;
};

namespace {

thread_local std::string last_error;

adjsup_status fail(adjsup_status status, std::string message) {
    last_error = std::move(message);
    return status;
}

template <typename Fn>
adjsup_status guarded(Fn &&fn) {
    try {
        last_error.clear();
        return fn();
    } catch (const adjsup::ConfigError &e) {
        return fail(ADJSUP_ERR_CONFIG, e.what());
    } catch (const adjsup::NoOutputError &e) {
        return fail(ADJSUP_ERR_NO_OUTPUT, e.what());
    } catch (const adjsup::InvariantError &e) {
        return fail(ADJSUP_ERR_INVARIANT, e.what());
    } catch (const std::bad_alloc &) {
        return fail(ADJSUP_ERR_INTERNAL, "out of memory");
    } catch (const std::exception &e) {
        return fail(ADJSUP_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(ADJSUP_ERR_INTERNAL, "unknown error");
    }
}

#define ADJSUP_REQUIRE(ptr)                                              \
    do {                                                                 \
        if ((ptr) == nullptr) {                                          \
            return fail(ADJSUP_ERR_NULL_ARG, #ptr " must not be null"); \
        }                                                                \
    } while (0)

adjsup_result *wrap(adjsup::SchemeResult result) {
    auto *out = new adjsup_result{std::move(result), {}};
    out->entries.assign(out->value.final_state.weights().begin(), out->value.final_state.weights().end());
    return out;
}

}  // namespace

extern "C" {

const char *adjsup_version(void) {
    return "1.0.0";
}

const char *adjsup_status_string(adjsup_status status) {
    switch (status) {
        case ADJSUP_OK:
            return "ok";
        case ADJSUP_ERR_CONFIG:
            return "configuration error";
        case ADJSUP_ERR_NO_OUTPUT:
            return "no output obtainable";
        case ADJSUP_ERR_INVARIANT:
            return "internal invariant violated";
        case ADJSUP_ERR_NULL_ARG:
            return "null argument";
        case ADJSUP_ERR_RANGE:
            return "index out of range";
        case ADJSUP_ERR_INTERNAL:
            return "internal error";
    }
    return "unknown status";
}

const char *adjsup_last_error(void) {
    return last_error.c_str();
}

adjsup_status adjsup_params_create(uint32_t n_qubits, double p, uint32_t k, uint32_t marked, adjsup_params **out) {
    ADJSUP_REQUIRE(out);
    *out = nullptr;
    return guarded([&] {
        *out = new adjsup_params{adjsup::SchemeParams(n_qubits, p, k, marked)};
        return ADJSUP_OK;
    });
}

adjsup_status adjsup_params_create_with_completion(
    uint32_t n_qubits, double p, uint32_t k, uint32_t marked, const uint32_t *completion, size_t length,
    adjsup_params **out) {
    ADJSUP_REQUIRE(out);
    ADJSUP_REQUIRE(completion);
    *out = nullptr;
    return guarded([&] {
        std::vector<adjsup::BasisLabel> perm(completion, completion + length);
        *out = new adjsup_params{adjsup::SchemeParams(n_qubits, p, k, marked, std::move(perm))};
        return ADJSUP_OK;
    });
}

adjsup_status adjsup_params_get(
    const adjsup_params *params, uint32_t *n_qubits, double *p, uint32_t *k, uint32_t *marked) {
    ADJSUP_REQUIRE(params);
    if (n_qubits) *n_qubits = params->value.n_qubits();
    if (p) *p = params->value.p();
    if (k) *k = params->value.k();
    if (marked) *marked = params->value.marked();
    return ADJSUP_OK;
}

void adjsup_params_destroy(adjsup_params *params) {
    delete params;
}

adjsup_status adjsup_analytic(uint32_t n_qubits, double p, uint32_t k, adjsup_analytic_point *out) {
    ADJSUP_REQUIRE(out);
    return guarded([&] {
        adjsup::AnalyticPoint a = adjsup::analytic_point(n_qubits, p, k);
        *out = adjsup_analytic_point{
            a.n_qubits, a.p, a.k, a.epsilon, a.log_epsilon, a.zeta, a.survival, a.expected_runs, a.log_correct_weight,
            a.log_wrong_weight_total,
        };
        return ADJSUP_OK;
    });
}

adjsup_status adjsup_run_scheme(const adjsup_params *params, adjsup_result **out) {
    ADJSUP_REQUIRE(params);
    ADJSUP_REQUIRE(out);
    *out = nullptr;
    return guarded([&] {
        *out = wrap(adjsup::run_scheme(params->value));
        return ADJSUP_OK;
    });
}

adjsup_status adjsup_run_scheme_dm(const adjsup_params *params, adjsup_result **out) {
    ADJSUP_REQUIRE(params);
    ADJSUP_REQUIRE(out);
    *out = nullptr;
    return guarded([&] {
        *out = wrap(adjsup::dm::run_scheme_dm(params->value));
        return ADJSUP_OK;
    });
}

adjsup_status adjsup_result_survival(const adjsup_result *result, double *out) {
    ADJSUP_REQUIRE(result);
    ADJSUP_REQUIRE(out);
    *out = result->value.survival;
    return ADJSUP_OK;
}

adjsup_status adjsup_result_absorbed(const adjsup_result *result, double *out) {
    ADJSUP_REQUIRE(result);
    ADJSUP_REQUIRE(out);
    *out = result->value.final_state.absorbed();
    return ADJSUP_OK;
}

adjsup_status adjsup_result_error_rate(const adjsup_result *result, double *out) {
    ADJSUP_REQUIRE(result);
    ADJSUP_REQUIRE(out);
    if (!result->value.error_rate) {
        *out = std::numeric_limits<double>::quiet_NaN();
        return fail(ADJSUP_ERR_NO_OUTPUT, "all mass absorbed; error rate undefined");
    }
    *out = *result->value.error_rate;
    return ADJSUP_OK;
}

adjsup_status adjsup_result_all_absorbed_at(const adjsup_result *result, uint32_t *out) {
    ADJSUP_REQUIRE(result);
    ADJSUP_REQUIRE(out);
    if (!result->value.all_absorbed_at) {
        *out = 0;
        return ADJSUP_ERR_NO_OUTPUT;
    }
    *out = *result->value.all_absorbed_at;
    return ADJSUP_OK;
}

size_t adjsup_result_entry_count(const adjsup_result *result) {
    return result ? result->entries.size() : 0;
}

adjsup_status adjsup_result_entry(
    const adjsup_result *result, size_t index, uint32_t *output, uint32_t *ancilla, double *weight) {
    ADJSUP_REQUIRE(result);
    if (index >= result->entries.size()) {
        return fail(ADJSUP_ERR_RANGE, "entry index out of range");
    }
    const auto &[at, w] = result->entries[index];
    if (output) *output = at.output;
    if (ancilla) *ancilla = at.ancilla;
    if (weight) *weight = w;
    return ADJSUP_OK;
}

size_t adjsup_result_cycle_count(const adjsup_result *result) {
    return result ? result->value.per_cycle.size() : 0;
}

adjsup_status adjsup_result_cycle(const adjsup_result *result, size_t index, adjsup_cycle *out) {
    ADJSUP_REQUIRE(result);
    ADJSUP_REQUIRE(out);
    if (index >= result->value.per_cycle.size()) {
        return fail(ADJSUP_ERR_RANGE, "cycle index out of range");
    }
    const adjsup::CycleRecord &c = result->value.per_cycle[index];
    *out = adjsup_cycle{c.applications, c.survival, c.correct_weight, c.wrong_weight};
    return ADJSUP_OK;
}

void adjsup_result_destroy(adjsup_result *result) {
    delete result;
}

adjsup_status adjsup_verify_against_analytic(const adjsup_result *result, adjsup_verify_report *out) {
    ADJSUP_REQUIRE(result);
    ADJSUP_REQUIRE(out);
    return guarded([&] {
        adjsup::VerifyReport r = adjsup::verify_against_analytic(result->value);
        *out = adjsup_verify_report{
            r.error_rate.simulated, r.error_rate.analytic, r.error_rate.abs_dev, r.error_rate.rel_dev,
            r.survival.simulated,   r.survival.analytic,   r.survival.abs_dev,   r.survival.rel_dev,
            r.underflow ? 1 : 0,    r.passed ? 1 : 0,
        };
        return ADJSUP_OK;
    });
}

adjsup_status adjsup_sweep(
    const adjsup_params *const *grid, size_t count, uint32_t threads, adjsup_result **results,
    adjsup_status *statuses) {
    if (count == 0) {
        return ADJSUP_OK;
    }
    ADJSUP_REQUIRE(grid);
    ADJSUP_REQUIRE(results);
    ADJSUP_REQUIRE(statuses);
    for (size_t i = 0; i < count; ++i) {
        results[i] = nullptr;
        ADJSUP_REQUIRE(grid[i]);
    }
    return guarded([&] {
        std::vector<adjsup::SchemeParams> points;
        points.reserve(count);
        for (size_t i = 0; i < count; ++i) {
            points.push_back(grid[i]->value);
        }
        std::vector<adjsup::SweepItem> items = adjsup::sweep(points, threads);
        for (size_t i = 0; i < count; ++i) {
            if (auto *r = std::get_if<adjsup::SchemeResult>(&items[i])) {
                results[i] = wrap(std::move(*r));
                statuses[i] = ADJSUP_OK;
            } else {
                statuses[i] = ADJSUP_ERR_INTERNAL;
            }
        }
        return ADJSUP_OK;
    });
}

adjsup_status adjsup_mc_estimate(
    const adjsup_params *params, uint64_t trials, uint64_t seed, uint32_t threads, adjsup_mc **out) {
    ADJSUP_REQUIRE(params);
    ADJSUP_REQUIRE(out);
    *out = nullptr;
    return guarded([&] {
        auto *mc = new adjsup_mc{adjsup::estimate(params->value, trials, seed, threads), {}};
        mc->histogram.assign(mc->value.histogram.begin(), mc->value.histogram.end());
        *out = mc;
        return ADJSUP_OK;
    });
}

adjsup_status adjsup_mc_get_summary(const adjsup_mc *mc, adjsup_mc_summary *out) {
    ADJSUP_REQUIRE(mc);
    ADJSUP_REQUIRE(out);
    const adjsup::MCEstimate &e = mc->value;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    *out = adjsup_mc_summary{
        e.trials,
        e.seed,
        e.survived,
        e.errors,
        e.survival_freq,
        e.stderr_survival,
        e.error_freq_conditional ? 1 : 0,
        e.error_freq_conditional.value_or(nan),
        e.stderr_error.value_or(nan),
    };
    return ADJSUP_OK;
}

size_t adjsup_mc_histogram_count(const adjsup_mc *mc) {
    return mc ? mc->histogram.size() : 0;
}

adjsup_status adjsup_mc_histogram_entry(const adjsup_mc *mc, size_t index, uint32_t *label, uint64_t *count) {
    ADJSUP_REQUIRE(mc);
    if (index >= mc->histogram.size()) {
        return fail(ADJSUP_ERR_RANGE, "histogram index out of range");
    }
    if (label) *label = mc->histogram[index].first;
    if (count) *count = mc->histogram[index].second;
    return ADJSUP_OK;
}

void adjsup_mc_destroy(adjsup_mc *mc) {
    delete mc;
}

adjsup_status adjsup_dm_compare(const adjsup_params *params, adjsup_compare_report *out) {
    ADJSUP_REQUIRE(params);
    ADJSUP_REQUIRE(out);
    return guarded([&] {
        adjsup::dm::CompareReport r = adjsup::dm::compare(params->value);
        *out = adjsup_compare_report{
            r.max_entry_dev, r.max_off_diagonal, r.trace_deficit_dev, r.survival_dev,
            r.error_rate_dev, r.min_eigenvalue,  r.passed ? 1 : 0,
        };
        return ADJSUP_OK;
    });
}

void adjsup_validate_options_init(adjsup_validate_options *options) {
    if (options == nullptr) {
        return;
    }
    adjsup::ValidateOptions defaults;
    *options = adjsup_validate_options{defaults.max_n, defaults.mc_trials, defaults.mc_seed, 0};
}

adjsup_status adjsup_validate(const adjsup_validate_options *options, adjsup_validation **out) {
    ADJSUP_REQUIRE(options);
    ADJSUP_REQUIRE(out);
    *out = nullptr;
    return guarded([&] {
        adjsup::ValidateOptions opts;
        opts.max_n = options->max_n;
        opts.mc_trials = options->mc_trials;
        opts.mc_seed = options->mc_seed;
        opts.inject_fault = options->inject_fault != 0;
        auto *v = new adjsup_validation{adjsup::validate(opts), {}};
        v->text = v->value.to_text();
        *out = v;
        return ADJSUP_OK;
    });
}

int adjsup_validation_passed(const adjsup_validation *validation) {
    return validation && validation->value.passed ? 1 : 0;
}

size_t adjsup_validation_check_count(const adjsup_validation *validation) {
    return validation ? validation->value.checks.size() : 0;
}

size_t adjsup_validation_failure_count(const adjsup_validation *validation) {
    return validation ? validation->value.failures : 0;
}

const char *adjsup_validation_text(const adjsup_validation *validation) {
    return validation ? validation->text.c_str() : "";
}

void adjsup_validation_destroy(adjsup_validation *validation) {
    delete validation;
}

}  // extern "C"
