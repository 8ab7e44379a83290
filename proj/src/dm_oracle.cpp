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

#include "adjsup/dm_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace adjsup::dm {

namespace {

// (V (x) I) X for X indexed (output << N) | ancilla: each column reshapes to
// a d x d matrix M(ancilla, output), and the product is M V^T.
Eigen::MatrixXcd left_apply(const Eigen::MatrixXcd &unitary, const Eigen::MatrixXcd &x, std::size_t d) {
    Eigen::MatrixXcd out(x.rows(), x.cols());
    const Eigen::MatrixXcd vt = unitary.transpose();
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
        Eigen::Map<const Eigen::MatrixXcd> m(x.col(j).data(), d, d);
        Eigen::Map<Eigen::MatrixXcd> dst(out.col(j).data(), d, d);
        dst.noalias() = m * vt;
    }
    return out;
}

Eigen::PermutationMatrix<Eigen::Dynamic> register_permutation(
    unsigned n_qubits, bool target_ancilla) {
    const std::size_t d = std::size_t{1} << n_qubits;
    Eigen::PermutationMatrix<Eigen::Dynamic> perm(static_cast<Eigen::Index>(d * d));
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
            std::size_t from = (a << n_qubits) | b;
            std::size_t to = target_ancilla ? (a << n_qubits) | (b ^ a) : ((a ^ b) << n_qubits) | b;
            perm.indices()[static_cast<Eigen::Index>(from)] = static_cast<int>(to);
        }
    }
    return perm;
}

void apply_permutation(DensityMatrix &rho, const Eigen::PermutationMatrix<Eigen::Dynamic> &perm) {
    Eigen::MatrixXcd next = perm * rho.matrix() * perm.transpose();
    rho.matrix() = std::move(next);
}

}  // namespace

DensityMatrix::DensityMatrix(unsigned n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxOracleQubits) {
        throw ConfigError("dense oracle supports 1 to " + std::to_string(kMaxOracleQubits) + " qubits");
    }
    rho_ = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim()), static_cast<Eigen::Index>(dim()));
}

double DensityMatrix::max_off_diagonal() const {
    double worst = 0.0;
    for (Eigen::Index j = 0; j < rho_.cols(); ++j) {
        for (Eigen::Index i = 0; i < rho_.rows(); ++i) {
            if (i != j) {
                worst = std::max(worst, std::abs(rho_(i, j)));
            }
        }
    }
    return worst;
}

double DensityMatrix::hermiticity_defect() const {
    return (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::min_eigenvalue() const {
    Eigen::MatrixXcd herm = 0.5 * (rho_ + rho_.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

Eigen::MatrixXcd build_completion_unitary(const SchemeParams &params) {
    const auto &completion = params.completion();
    const std::size_t d = params.dim();
    if (completion.size() != d || completion[0] != params.marked()) {
        throw ConfigError("completion must be a permutation with completion(0) = marked");
    }
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (std::size_t a = 0; a < d; ++a) {
        if (completion[a] >= d || u.row(completion[a]).cwiseAbs().sum() != 0.0) {
            throw ConfigError("completion is not a bijection");
        }
        u(completion[a], static_cast<Eigen::Index>(a)) = 1.0;
    }
    Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(u.rows(), u.cols());
    if ((u * u.adjoint() - id).cwiseAbs().maxCoeff() > 1e-14) {
        throw ConfigError("completion matrix is not unitary");
    }
    return u;
}

void apply_noisy_unitary(DensityMatrix &rho, const Eigen::MatrixXcd &unitary, double p) {
    const std::size_t d = rho.register_dim();
    const Eigen::MatrixXcd &x = rho.matrix();

    // tr_1(rho)
    Eigen::MatrixXcd reduced = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (std::size_t a = 0; a < d; ++a) {
        auto off = static_cast<Eigen::Index>(a * d);
        reduced += x.block(off, off, static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    }

    Eigen::MatrixXcd half = left_apply(unitary, x, d);
    Eigen::MatrixXcd next = left_apply(unitary, half.adjoint(), d).adjoint();
    next *= (1.0 - p);
    const double share = p / static_cast<double>(d);
    for (std::size_t a = 0; a < d; ++a) {
        auto off = static_cast<Eigen::Index>(a * d);
        next.block(off, off, static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d)) += share * reduced;
    }
    rho.matrix() = std::move(next);
}

void apply_cnot2(DensityMatrix &rho) {
    apply_permutation(rho, register_permutation(rho.n_qubits(), true));
}

void apply_cnot1(DensityMatrix &rho) {
    apply_permutation(rho, register_permutation(rho.n_qubits(), false));
}

void apply_absorb(DensityMatrix &rho) {
    const auto d = static_cast<Eigen::Index>(rho.register_dim());
    const auto n = static_cast<Eigen::Index>(rho.dim());
    // Output label 0 occupies indices [0, d).
    Eigen::MatrixXcd &x = rho.matrix();
    x.block(d, 0, n - d, n).setZero();
    x.block(0, d, d, n - d).setZero();
}

namespace {

DiagonalState diagonal_of(const DensityMatrix &rho) {
    DiagonalState state(rho.n_qubits());
    const std::size_t d = rho.register_dim();
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
            double w = rho.matrix()(static_cast<Eigen::Index>(rho.index(a, b)), static_cast<Eigen::Index>(rho.index(a, b))).real();
            if (w > 0.0) {
                state.add({static_cast<BasisLabel>(a), static_cast<BasisLabel>(b)}, w);
            }
        }
    }
    state.add_absorbed(std::max(0.0, 1.0 - rho.trace()));
    return state;
}

}  // namespace

OracleRun run_scheme_dm_full(const SchemeParams &params) {
    DensityMatrix rho(params.n_qubits());
    const Eigen::MatrixXcd u = build_completion_unitary(params);
    const Eigen::MatrixXcd u_dag = u.adjoint();
    const bool check_spectrum = rho.dim() <= 256;

    double worst_off = 0.0;
    double worst_herm = 0.0;
    double min_eig = std::numeric_limits<double>::infinity();
    auto checkpoint = [&] {
        worst_off = std::max(worst_off, rho.max_off_diagonal());
        worst_herm = std::max(worst_herm, rho.hermiticity_defect());
        if (check_spectrum) {
            min_eig = std::min(min_eig, rho.min_eigenvalue());
        }
    };

    rho.matrix()(0, 0) = 1.0;
    apply_noisy_unitary(rho, u, params.p());
    checkpoint();
    apply_cnot2(rho);
    checkpoint();

    std::vector<CycleRecord> trace;
    trace.push_back(summarize(diagonal_of(rho), params, 1));
    std::optional<unsigned> all_absorbed_at;
    for (unsigned t = 2; t <= params.k(); ++t) {
        apply_noisy_unitary(rho, u_dag, params.p());
        checkpoint();
        apply_absorb(rho);
        checkpoint();
        apply_cnot1(rho);
        checkpoint();
        trace.push_back(summarize(diagonal_of(rho), params, t));
        if (!all_absorbed_at && trace.back().survival == 0.0) {
            all_absorbed_at = t;
        }
    }
    if (!check_spectrum) {
        min_eig = rho.min_eigenvalue();
    }

    DiagonalState final_state = diagonal_of(rho);
    double survival = trace.back().survival;
    std::optional<double> error_rate;
    if (!all_absorbed_at) {
        error_rate = trace.back().wrong_weight / survival;
    }
    SchemeResult result{params, std::move(final_state), survival, error_rate, all_absorbed_at, std::move(trace)};
    return OracleRun{std::move(result), std::move(rho), worst_off, worst_herm, min_eig};
}

SchemeResult run_scheme_dm(const SchemeParams &params) {
    return run_scheme_dm_full(params).result;
}

CompareReport compare(const SchemeParams &params, const ChannelSet &channels) {
    SchemeResult sparse = run_scheme(params, channels);
    OracleRun dense = run_scheme_dm_full(params);
    const DensityMatrix &rho = dense.final_rho;

    CompareReport report{};
    const std::size_t d = rho.register_dim();
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
            auto i = static_cast<Eigen::Index>(rho.index(a, b));
            double w = rho.matrix()(i, i).real();
            double s = sparse.final_state.weight({static_cast<BasisLabel>(a), static_cast<BasisLabel>(b)});
            report.max_entry_dev = std::max(report.max_entry_dev, std::abs(w - s));
        }
    }
    report.max_off_diagonal = dense.max_off_diagonal;
    report.trace_deficit_dev = std::abs((1.0 - rho.trace()) - sparse.final_state.absorbed());
    report.survival_dev = std::abs(sparse.survival - dense.result.survival);
    if (sparse.error_rate.has_value() != dense.result.error_rate.has_value()) {
        report.error_rate_dev = std::numeric_limits<double>::infinity();
    } else if (sparse.error_rate) {
        report.error_rate_dev = std::abs(*sparse.error_rate - *dense.result.error_rate);
    }
    report.min_eigenvalue = dense.min_eigenvalue;

    std::ostringstream why;
    auto check = [&](bool ok, const char *what, double value) {
        if (!ok) {
            why << what << "=" << value << "; ";
        }
        return ok;
    };
    bool ok = true;
    ok &= check(report.max_entry_dev <= kCompareTol, "entry deviation", report.max_entry_dev);
    ok &= check(report.max_off_diagonal <= kCompareTol, "off-diagonal", report.max_off_diagonal);
    ok &= check(report.trace_deficit_dev <= kCompareTol, "trace deficit deviation", report.trace_deficit_dev);
    ok &= check(report.survival_dev <= kCompareTol, "survival deviation", report.survival_dev);
    ok &= check(report.error_rate_dev <= kCompareTol, "error rate deviation", report.error_rate_dev);
    ok &= check(dense.max_hermiticity_defect <= kCompareTol, "hermiticity defect", dense.max_hermiticity_defect);
    ok &= check(report.min_eigenvalue >= -1e-10, "min eigenvalue", report.min_eigenvalue);
    ok &= check(rho.trace() <= 1.0 + kCompareTol, "trace", rho.trace());
    report.passed = ok;
    report.detail = why.str();
    return report;
}

}  // namespace adjsup::dm
