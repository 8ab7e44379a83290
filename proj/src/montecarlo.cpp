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

#include "adjsup/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <vector>

namespace adjsup {

std::uint64_t TrialRng::mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t trial_index)
    : state_(mix(mix(seed + 0x9E3779B97F4A7C15ULL) ^ (trial_index * 0xD1B54A32D192ED03ULL))) {
}

std::uint64_t TrialRng::next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
}

double TrialRng::next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

bool TrialRng::bernoulli(double p) {
    return next_unit() < p;
}

BasisLabel TrialRng::uniform_label(unsigned bits) {
    return static_cast<BasisLabel>(next_u64() >> (64 - bits));
}

TrajectoryOutcome sample_trajectory(const SchemeParams &params, std::uint64_t trial_index, std::uint64_t seed) {
    TrialRng rng(seed, trial_index);
    const unsigned bits = params.n_qubits();
    const double p = params.p();

    BasisLabel reg = rng.bernoulli(p) ? rng.uniform_label(bits) : params.complete(0);
    const BasisLabel ancilla = reg;

    for (unsigned t = 2; t <= params.k(); ++t) {
        if (rng.bernoulli(p)) {
            reg = rng.uniform_label(bits);
        } else if (reg != params.marked()) {
            // Noiseless adjoint of a wrong label has no |0...0> component.
            return {TrajectoryOutcome::Status::Absorbed, t, std::nullopt};
        } else {
            reg = 0;
        }
        if (reg != 0) {
            return {TrajectoryOutcome::Status::Absorbed, t, std::nullopt};
        }
        reg ^= ancilla;
    }
    return {TrajectoryOutcome::Status::Survived, std::nullopt, reg};
}

namespace {

struct Tally {
    std::uint64_t survived = 0;
    std::uint64_t errors = 0;
    std::vector<std::uint64_t> histogram;
};

}  // namespace

MCEstimate estimate(const SchemeParams &params, std::uint64_t trials, std::uint64_t seed, unsigned threads) {
    if (trials < 1) {
        throw ConfigError("trials must be at least 1");
    }
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, (trials + 9999) / 10000));
    threads = std::max(threads, 1u);

    std::vector<Tally> tallies(threads, Tally{0, 0, std::vector<std::uint64_t>(params.dim(), 0)});
    auto run_range = [&](unsigned slot, std::uint64_t begin, std::uint64_t end) {
        Tally &tally = tallies[slot];
        for (std::uint64_t i = begin; i < end; ++i) {
            TrajectoryOutcome outcome = sample_trajectory(params, i, seed);
            if (outcome.survived()) {
                ++tally.survived;
                ++tally.histogram[*outcome.final_label];
                if (*outcome.final_label != params.marked()) {
                    ++tally.errors;
                }
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        std::uint64_t chunk = trials / threads;
        for (unsigned t = 0; t < threads; ++t) {
            std::uint64_t begin = t * chunk;
            std::uint64_t end = t + 1 == threads ? trials : begin + chunk;
            pool.emplace_back(run_range, t, begin, end);
        }
    }

    MCEstimate est{};
    est.trials = trials;
    est.seed = seed;
    std::vector<std::uint64_t> histogram(params.dim(), 0);
    for (const Tally &tally : tallies) {
        est.survived += tally.survived;
        est.errors += tally.errors;
        for (std::size_t j = 0; j < histogram.size(); ++j) {
            histogram[j] += tally.histogram[j];
        }
    }
    for (std::size_t j = 0; j < histogram.size(); ++j) {
        if (histogram[j] != 0) {
            est.histogram[static_cast<BasisLabel>(j)] = histogram[j];
        }
    }

    const double n = static_cast<double>(trials);
    est.survival_freq = static_cast<double>(est.survived) / n;
    est.stderr_survival = std::sqrt(est.survival_freq * (1.0 - est.survival_freq) / n);
    if (est.survived > 0) {
        const double s = static_cast<double>(est.survived);
        double f = static_cast<double>(est.errors) / s;
        est.error_freq_conditional = f;
        est.stderr_error = std::sqrt(f * (1.0 - f) / s);
    }
    return est;
}

}  // namespace adjsup
