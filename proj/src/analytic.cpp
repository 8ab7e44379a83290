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

#include "adjsup/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "adjsup/state.hpp"

namespace adjsup {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_domain(unsigned n_qubits, double p, unsigned k) {
    if (n_qubits < 1 || n_qubits > kMaxAnalyticQubits) {
        throw ConfigError("n_qubits must be in [1, " + std::to_string(kMaxAnalyticQubits) + "]");
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ConfigError("p must be in [0, 1]");
    }
    if (k < 1) {
        throw ConfigError("k must be at least 1");
    }
}

// ln(2^N - 1)
double log_wrong_count(unsigned n_qubits) {
    return n_qubits * std::numbers::ln2 + std::log1p(-std::ldexp(1.0, -static_cast<int>(n_qubits)));
}

// Fraction (2^N - 1)/2^N of the depolarized mass that lands on wrong labels.
double wrong_fraction(unsigned n_qubits) {
    return 1.0 - std::ldexp(1.0, -static_cast<int>(n_qubits));
}

double log_add_exp(double a, double b) {
    if (a == -kInf) {
        return b;
    }
    if (b == -kInf) {
        return a;
    }
    double hi = std::max(a, b);
    double lo = std::min(a, b);
    return hi + std::log1p(std::exp(lo - hi));
}

}  // namespace

BranchWeights branch_weights(unsigned n_qubits, double p, unsigned k) {
    check_domain(n_qubits, p, k);
    BranchWeights out{};
    out.log_correct = k * std::log1p(-wrong_fraction(n_qubits) * p);
    out.log_wrong_total =
        p == 0.0 ? -kInf : log_wrong_count(n_qubits) + k * (std::log(p) - n_qubits * std::numbers::ln2);
    out.correct = std::exp(out.log_correct);
    out.wrong_total = std::exp(out.log_wrong_total);
    return out;
}

double log_epsilon(unsigned n_qubits, double p, unsigned k) {
    check_domain(n_qubits, p, k);
    if (p == 0.0) {
        return -kInf;
    }
    if (p == 1.0) {
        return std::log1p(-std::ldexp(1.0, -static_cast<int>(n_qubits)));
    }
    // ln([2^N(1/p - 1) + 1]^k / (2^N - 1)), with 2^N(1/p - 1) + 1 rewritten as
    // (1 - (2^N-1)p/2^N) / (p/2^N) so tiny p cannot overflow.
    double per_step = std::log1p(-wrong_fraction(n_qubits) * p) - std::log(p) + n_qubits * std::numbers::ln2;
    double x = k * per_step - log_wrong_count(n_qubits);
    // -ln(1 + e^x)
    return x > 0.0 ? -x - std::log1p(std::exp(-x)) : -std::log1p(std::exp(x));
}

double epsilon(unsigned n_qubits, double p, unsigned k) {
    double log_eps = log_epsilon(n_qubits, p, k);
    if (p == 1.0) {
        return wrong_fraction(n_qubits);
    }
    return std::exp(log_eps);
}

double zeta(unsigned n_qubits, double p, unsigned k) {
    BranchWeights w = branch_weights(n_qubits, p, k);
    if (k == 1) {
        // A single forward run has no ABSORB step.
        return 0.0;
    }
    double z = -std::expm1(w.log_correct) - w.wrong_total;
    return z < 0.0 ? 0.0 : z;
}

double expected_runs(unsigned n_qubits, double p, unsigned k) {
    BranchWeights w = branch_weights(n_qubits, p, k);
    if (k == 1) {
        return 1.0;
    }
    return std::max(1.0, std::exp(-log_add_exp(w.log_correct, w.log_wrong_total)));
}

AnalyticPoint analytic_point(unsigned n_qubits, double p, unsigned k) {
    BranchWeights w = branch_weights(n_qubits, p, k);
    AnalyticPoint out{};
    out.n_qubits = n_qubits;
    out.p = p;
    out.k = k;
    out.epsilon = epsilon(n_qubits, p, k);
    out.log_epsilon = log_epsilon(n_qubits, p, k);
    out.zeta = zeta(n_qubits, p, k);
    out.survival = k == 1 ? 1.0 : std::exp(log_add_exp(w.log_correct, w.log_wrong_total));
    out.expected_runs = expected_runs(n_qubits, p, k);
    out.log_correct_weight = w.log_correct;
    out.log_wrong_weight_total = w.log_wrong_total;
    return out;
}

}  // namespace adjsup
