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

#ifndef ADJSUP_ANALYTIC_HPP
#define ADJSUP_ANALYTIC_HPP

namespace adjsup {

/// Largest register width the closed forms accept.
inline constexpr unsigned kMaxAnalyticQubits = 52;

/// Surviving branch weights after k total applications. `correct` is the
/// weight on the marked label; `wrong_total` sums the 2^N - 1 equal wrong
/// labels. The log fields stay finite when the raw values underflow.
struct BranchWeights {
    double correct;
    double wrong_total;
    double log_correct;
    double log_wrong_total;
};

struct AnalyticPoint {
    unsigned n_qubits;
    double p;
    unsigned k;
    double epsilon;
    double log_epsilon;
    double zeta;
    /// 1 - zeta, evaluated from the branch weights so it keeps full
    /// relative precision when tiny.
    double survival;
    double expected_runs;
    double log_correct_weight;
    double log_wrong_weight_total;
};

BranchWeights branch_weights(unsigned n_qubits, double p, unsigned k);

/// Conditional probability that a surviving output is wrong, evaluated in the
/// ratio form 1 / (1 + [2^N(1/p - 1) + 1]^k / (2^N - 1)) with the power taken
/// in log space.
double epsilon(unsigned n_qubits, double p, unsigned k);

/// Natural log of epsilon; -infinity at p = 0.
double log_epsilon(unsigned n_qubits, double p, unsigned k);

/// Probability that the whole scheme is absorbed: one minus the surviving mass
/// (2^N - 1)(p/2^N)^k + (1 - (2^N - 1)p/2^N)^k.
double zeta(unsigned n_qubits, double p, unsigned k);

/// Mean number of whole-scheme repetitions until an output survives,
/// 1 / (1 - zeta). Infinite if the survival underflows.
double expected_runs(unsigned n_qubits, double p, unsigned k);

AnalyticPoint analytic_point(unsigned n_qubits, double p, unsigned k);

}  // namespace adjsup

#endif
