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

#include "adjsup/state.hpp"

#include <cmath>
#include <sstream>

namespace adjsup {

namespace {

void check_width(unsigned n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw ConfigError(
            "n_qubits must be in [1, " + std::to_string(kMaxQubits) + "], got " + std::to_string(n_qubits));
    }
}

}  // namespace

DiagonalState::DiagonalState(unsigned n_qubits) : n_qubits_(n_qubits) {
    check_width(n_qubits);
}

DiagonalState::DiagonalState(unsigned n_qubits, Weights weights, double absorbed)
    : n_qubits_(n_qubits), absorbed_(absorbed) {
    check_width(n_qubits);
    if (!(absorbed >= 0.0)) {
        throw ConfigError("absorbed mass must be non-negative");
    }
    for (const auto &[at, w] : weights) {
        add(at, w);
    }
}

void DiagonalState::check_label(BasisLabel label) const {
    if (label >= dim()) {
        throw InvariantError(
            "label " + std::to_string(label) + " out of range for " + std::to_string(n_qubits_) + " qubits");
    }
}

double DiagonalState::weight(LabelPair at) const {
    auto it = weights_.find(at);
    return it == weights_.end() ? 0.0 : it->second;
}

void DiagonalState::add(LabelPair at, double w) {
    if (w == 0.0) {
        return;
    }
    if (!(w > 0.0) || !std::isfinite(w)) {
        throw InvariantError("weights must be finite and non-negative");
    }
    check_label(at.output);
    check_label(at.ancilla);
    weights_[at] += w;
}

DiagonalState initial_state(unsigned n_qubits) {
    DiagonalState state(n_qubits);
    state.add({0, 0}, 1.0);
    return state;
}

double total_mass(const DiagonalState &state) {
    double sum = state.absorbed();
    for (const auto &[at, w] : state.weights()) {
        sum += w;
    }
    return sum;
}

std::map<BasisLabel, double> marginal(const DiagonalState &state, Register reg) {
    std::map<BasisLabel, double> out;
    for (const auto &[at, w] : state.weights()) {
        out[reg == Register::Output ? at.output : at.ancilla] += w;
    }
    return out;
}

std::map<BasisLabel, double> conditional_distribution(const DiagonalState &state, Register reg) {
    double survival = 0.0;
    for (const auto &[at, w] : state.weights()) {
        survival += w;
    }
    if (!(survival > 0.0)) {
        throw NoOutputError("no output obtainable: all mass absorbed");
    }
    auto out = marginal(state, reg);
    for (auto &[label, w] : out) {
        w /= survival;
    }
    return out;
}

std::vector<BasisLabel> swap_completion(unsigned n_qubits, BasisLabel marked) {
    check_width(n_qubits);
    std::uint64_t dim = std::uint64_t{1} << n_qubits;
    if (marked >= dim) {
        throw ConfigError("marked label out of range");
    }
    std::vector<BasisLabel> perm(dim);
    for (std::uint64_t i = 0; i < dim; ++i) {
        perm[i] = static_cast<BasisLabel>(i);
    }
    std::swap(perm[0], perm[marked]);
    return perm;
}

SchemeParams::SchemeParams(unsigned n_qubits, double p, unsigned k, BasisLabel marked)
    : SchemeParams(n_qubits, p, k, marked, swap_completion(n_qubits, marked)) {
}

SchemeParams::SchemeParams(
    unsigned n_qubits, double p, unsigned k, BasisLabel marked, std::vector<BasisLabel> completion)
    : n_qubits_(n_qubits), p_(p), k_(k), marked_(marked), completion_(std::move(completion)) {
    check_width(n_qubits);
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ConfigError("p must be in [0, 1]");
    }
    if (k < 1) {
        throw ConfigError("k must be at least 1");
    }
    if (marked >= dim()) {
        throw ConfigError("marked label out of range");
    }
    if (completion_.size() != dim()) {
        throw ConfigError("completion must have 2^N entries");
    }
    std::vector<bool> seen(dim(), false);
    for (BasisLabel v : completion_) {
        if (v >= dim() || seen[v]) {
            throw ConfigError("completion is not a permutation");
        }
        seen[v] = true;
    }
    if (completion_[0] != marked) {
        throw ConfigError("completion must map 0 to the marked label");
    }
}

std::string describe(const SchemeParams &params) {
    std::ostringstream out;
    out << "(N=" << params.n_qubits() << ", p=" << params.p() << ", k=" << params.k() << ", y=" << params.marked()
        << ")";
    return out.str();
}

}  // namespace adjsup
