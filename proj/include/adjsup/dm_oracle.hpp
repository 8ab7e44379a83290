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

#ifndef ADJSUP_DM_ORACLE_HPP
#define ADJSUP_DM_ORACLE_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "adjsup/protocol.hpp"
#include "adjsup/state.hpp"

namespace adjsup::dm {

/// Largest register width the dense oracle accepts (dimension 4^6 = 4096).
inline constexpr unsigned kMaxOracleQubits = 6;

/// Dense operator on output (x) ancilla. Row/column index is
/// (output << N) | ancilla. Trace below 1 is absorbed mass.
class DensityMatrix {
   public:
    explicit DensityMatrix(unsigned n_qubits);

    unsigned n_qubits() const { return n_qubits_; }
    std::size_t register_dim() const { return std::size_t{1} << n_qubits_; }
    std::size_t dim() const { return register_dim() * register_dim(); }
    std::size_t index(BasisLabel output, BasisLabel ancilla) const { return (std::size_t{output} << n_qubits_) | ancilla; }

    Eigen::MatrixXcd &matrix() { return rho_; }
    const Eigen::MatrixXcd &matrix() const { return rho_; }

    double trace() const { return rho_.trace().real(); }
    double max_off_diagonal() const;
    double hermiticity_defect() const;
    /// Smallest eigenvalue of the Hermitian part.
    double min_eigenvalue() const;

   private:
    unsigned n_qubits_;
    Eigen::MatrixXcd rho_;
};

/// Permutation matrix whose column a is |completion(a)>. Throws ConfigError if
/// the completion is not a bijection or does not send 0 to the marked label.
Eigen::MatrixXcd build_completion_unitary(const SchemeParams &params);

/// rho -> (1-p) (V (x) I) rho (V (x) I)^dag + p (I/2^N) (x) tr_1(rho)
void apply_noisy_unitary(DensityMatrix &rho, const Eigen::MatrixXcd &unitary, double p);
/// |a, b> -> |a, b ^ a>
void apply_cnot2(DensityMatrix &rho);
/// |a, b> -> |a ^ b, b>
void apply_cnot1(DensityMatrix &rho);
/// Projects onto register 1 = |0...0>, without renormalizing.
void apply_absorb(DensityMatrix &rho);

struct OracleRun {
    SchemeResult result;
    DensityMatrix final_rho;
    /// Worst off-diagonal magnitude seen at any protocol checkpoint.
    double max_off_diagonal;
    double max_hermiticity_defect;
    double min_eigenvalue;
};

/// Literal dense-matrix execution of the scheme.
OracleRun run_scheme_dm_full(const SchemeParams &params);
SchemeResult run_scheme_dm(const SchemeParams &params);

inline constexpr double kCompareTol = 1e-12;

struct CompareReport {
    double max_entry_dev;
    double max_off_diagonal;
    double trace_deficit_dev;
    double survival_dev;
    double error_rate_dev;
    double min_eigenvalue;
    bool passed;
    std::string detail;
};

/// Runs the sparse and dense paths and checks them against each other.
CompareReport compare(const SchemeParams &params, const ChannelSet &channels = {});

}  // namespace adjsup::dm

#endif
