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

#ifndef ADJSUP_CHANNELS_HPP
#define ADJSUP_CHANNELS_HPP

#include <functional>

#include "adjsup/state.hpp"

namespace adjsup {

/// Noisy black-box algorithm on the output register:
/// rho -> (1-p) U rho U^dag + p I/2^N, ancilla untouched.
DiagonalState apply_forward_qa(const DiagonalState &state, const SchemeParams &params);

/// Register 2 ^= register 1.
DiagonalState apply_cnot2(const DiagonalState &state);

/// Register 1 ^= register 2.
DiagonalState apply_cnot1(const DiagonalState &state);

/// Noisy adjoint followed by post-selection on register 1 == 0.
///
/// Requires register 1 == register 2 on every entry. For label b != y the
/// noiseless adjoint output has zero overlap with |0...0> (since
/// <0|U^dag|b> = <b|y> = 0), so only the depolarized p/2^N term survives.
/// That holds for any completion, not only permutations.
DiagonalState apply_adjoint_and_absorb(const DiagonalState &state, const SchemeParams &params);

/// The four protocol steps as swappable callables. The protocol engine runs
/// whatever set it is handed; validation uses this to inject a broken channel.
struct ChannelSet {
    std::function<DiagonalState(const DiagonalState &, const SchemeParams &)> forward_qa = apply_forward_qa;
    std::function<DiagonalState(const DiagonalState &)> cnot2 = apply_cnot2;
    std::function<DiagonalState(const DiagonalState &, const SchemeParams &)> adjoint_and_absorb =
        apply_adjoint_and_absorb;
    std::function<DiagonalState(const DiagonalState &)> cnot1 = apply_cnot1;
};

/// Channel set whose adjoint lets `leak` times too much weight survive.
/// Negative control for validation only.
ChannelSet corrupted_channels(double leak = 0.01);

}  // namespace adjsup

#endif
