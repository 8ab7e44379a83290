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

#ifndef ADJSUP_MONTECARLO_HPP
#define ADJSUP_MONTECARLO_HPP

#include <cstdint>
#include <map>
#include <optional>

#include "adjsup/state.hpp"

namespace adjsup {

/// SplitMix64 stream whose starting state is a pure function of
/// (seed, trial index), so any trial can be replayed in isolation and the
/// schedule of a parallel run cannot change its draws.
class TrialRng {
   public:
    TrialRng(std::uint64_t seed, std::uint64_t trial_index);

    std::uint64_t next_u64();
    /// Uniform in [0, 1) with 53 random bits.
    double next_unit();
    /// True with probability p; exact at p = 0 and p = 1.
    bool bernoulli(double p);
    /// Uniform over [0, 2^bits).
    BasisLabel uniform_label(unsigned bits);

    static std::uint64_t mix(std::uint64_t z);

   private:
    std::uint64_t state_;
};

struct TrajectoryOutcome {
    enum class Status { Survived, Absorbed };
    Status status;
    std::optional<unsigned> absorbed_at_cycle;
    std::optional<BasisLabel> final_label;

    bool survived() const { return status == Status::Survived; }
};

/// One photon-style run of the whole scheme with sampled depolarization
/// events. Cycle indices count total applications, so the first possible
/// absorption is at cycle 2.
TrajectoryOutcome sample_trajectory(const SchemeParams &params, std::uint64_t trial_index, std::uint64_t seed);

struct MCEstimate {
    std::uint64_t trials;
    std::uint64_t seed;
    std::uint64_t survived;
    std::uint64_t errors;
    double survival_freq;
    /// Wrong outputs among survivors; empty when nothing survived.
    std::optional<double> error_freq_conditional;
    double stderr_survival;
    std::optional<double> stderr_error;
    std::map<BasisLabel, std::uint64_t> histogram;

    friend bool operator==(const MCEstimate &, const MCEstimate &) = default;
};

/// Aggregates `trials` trajectories; bit-identical for fixed inputs regardless
/// of `threads` (0 picks the hardware concurrency).
MCEstimate estimate(const SchemeParams &params, std::uint64_t trials, std::uint64_t seed, unsigned threads = 0);

}  // namespace adjsup

#endif
