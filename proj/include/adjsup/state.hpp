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

#ifndef ADJSUP_STATE_HPP
#define ADJSUP_STATE_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace adjsup {

/// Largest register width accepted by the sparse path.
inline constexpr unsigned kMaxQubits = 12;

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A protocol precondition was violated by the state handed to an operation.
struct InvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Every weight was absorbed; there is no output to condition on.
struct NoOutputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using BasisLabel = std::uint32_t;

enum class Register { Output = 1, Ancilla = 2 };

/// Joint (output, ancilla) label. Ordered so iteration over a state is
/// deterministic.
struct LabelPair {
    BasisLabel output = 0;
    BasisLabel ancilla = 0;

    friend auto operator<=>(const LabelPair &, const LabelPair &) = default;
};

/// Classical mixture over computational-basis pairs of the two registers plus
/// the probability mass removed by post-selection.
///
/// Entries with weight exactly zero are never stored.
class DiagonalState {
   public:
    using Weights = std::map<LabelPair, double>;

    explicit DiagonalState(unsigned n_qubits);
    DiagonalState(unsigned n_qubits, Weights weights, double absorbed);

    unsigned n_qubits() const { return n_qubits_; }
    std::uint64_t dim() const { return std::uint64_t{1} << n_qubits_; }
    const Weights &weights() const { return weights_; }
    double absorbed() const { return absorbed_; }
    std::size_t size() const { return weights_.size(); }

    double weight(LabelPair at) const;

    /// Adds `w` to the entry at `at`; a zero `w` is a no-op.
    void add(LabelPair at, double w);
    void add_absorbed(double w) { absorbed_ += w; }

    friend bool operator==(const DiagonalState &, const DiagonalState &) = default;

   private:
    void check_label(BasisLabel label) const;

    unsigned n_qubits_;
    Weights weights_;
    double absorbed_ = 0.0;
};

DiagonalState initial_state(unsigned n_qubits);

double total_mass(const DiagonalState &state);

/// Unnormalized weight per label of one register; absorbed mass excluded.
std::map<BasisLabel, double> marginal(const DiagonalState &state, Register reg);

/// Marginal divided by the surviving mass. Throws NoOutputError when nothing
/// survives.
std::map<BasisLabel, double> conditional_distribution(const DiagonalState &state, Register reg);

/// One experiment's configuration. The completion is the full permutation of
/// labels standing in for the black-box unitary; only completion[0] == marked
/// is prescribed.
class SchemeParams {
   public:
    /// Uses the default completion that swaps 0 and `marked`.
    SchemeParams(unsigned n_qubits, double p, unsigned k, BasisLabel marked);
    SchemeParams(unsigned n_qubits, double p, unsigned k, BasisLabel marked, std::vector<BasisLabel> completion);

    unsigned n_qubits() const { return n_qubits_; }
    std::uint64_t dim() const { return std::uint64_t{1} << n_qubits_; }
    double p() const { return p_; }
    unsigned k() const { return k_; }
    BasisLabel marked() const { return marked_; }
    const std::vector<BasisLabel> &completion() const { return completion_; }
    BasisLabel complete(BasisLabel input) const { return completion_[input]; }

   private:
    unsigned n_qubits_;
    double p_;
    unsigned k_;
    BasisLabel marked_;
    std::vector<BasisLabel> completion_;
};

std::vector<BasisLabel> swap_completion(unsigned n_qubits, BasisLabel marked);

std::string describe(const SchemeParams &params);

}  // namespace adjsup

#endif
