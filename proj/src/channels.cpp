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

#include "adjsup/channels.hpp"

#include <string>

namespace adjsup {

DiagonalState apply_forward_qa(const DiagonalState &state, const SchemeParams &params) {
    if (state.n_qubits() != params.n_qubits()) {
        throw InvariantError("state and params disagree on register width");
    }
    const double p = params.p();
    const double coherent = 1.0 - p;
    const double uniform = p / static_cast<double>(params.dim());

    DiagonalState out(state.n_qubits());
    out.add_absorbed(state.absorbed());
    for (const auto &[at, w] : state.weights()) {
        out.add({params.complete(at.output), at.ancilla}, w * coherent);
        if (uniform == 0.0) {
            continue;
        }
        for (BasisLabel j = 0; j < params.dim(); ++j) {
            out.add({j, at.ancilla}, w * uniform);
        }
    }
    return out;
}

DiagonalState apply_cnot2(const DiagonalState &state) {
    DiagonalState out(state.n_qubits());
    out.add_absorbed(state.absorbed());
    for (const auto &[at, w] : state.weights()) {
        out.add({at.output, at.ancilla ^ at.output}, w);
    }
    return out;
}

DiagonalState apply_cnot1(const DiagonalState &state) {
    DiagonalState out(state.n_qubits());
    out.add_absorbed(state.absorbed());
    for (const auto &[at, w] : state.weights()) {
        out.add({at.output ^ at.ancilla, at.ancilla}, w);
    }
    return out;
}

namespace {

DiagonalState adjoint_and_absorb_impl(const DiagonalState &state, const SchemeParams &params, double leak) {
    if (state.n_qubits() != params.n_qubits()) {
        throw InvariantError("state and params disagree on register width");
    }
    const double p = params.p();
    const double uniform = p / static_cast<double>(params.dim());
    const double back_to_zero = (1.0 - p) + uniform;

    DiagonalState out(state.n_qubits());
    double absorbed = state.absorbed();
    for (const auto &[at, w] : state.weights()) {
        if (at.output != at.ancilla) {
            throw InvariantError(
                "adjoint+absorb needs matching registers, got (" + std::to_string(at.output) + ", " +
                std::to_string(at.ancilla) + ")");
        }
        double survive = w * (at.output == params.marked() ? back_to_zero : uniform) * (1.0 + leak);
        out.add({0, at.ancilla}, survive);
        absorbed += w - survive;
    }
    out.add_absorbed(absorbed);
    return out;
}

}  // namespace

DiagonalState apply_adjoint_and_absorb(const DiagonalState &state, const SchemeParams &params) {
    return adjoint_and_absorb_impl(state, params, 0.0);
}

ChannelSet corrupted_channels(double leak) {
    ChannelSet set;
    set.adjoint_and_absorb = [leak](const DiagonalState &state, const SchemeParams &params) {
        return adjoint_and_absorb_impl(state, params, leak);
    };
    return set;
}

}  // namespace adjsup
