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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "adjsup/dm_oracle.hpp"

using namespace adjsup;
using namespace adjsup::dm;

TEST_CASE("completion unitary") {
    SUBCASE("N=1, y=1 is the bit flip") {
        Eigen::MatrixXcd u = build_completion_unitary(SchemeParams(1, 0.5, 2, 1));
        Eigen::MatrixXcd x(2, 2);
        x << 0, 1, 1, 0;
        CHECK((u - x).norm() == 0.0);
    }
    SUBCASE("N=2, y=3 swap exchanges 0 and 3") {
        Eigen::MatrixXcd u = build_completion_unitary(SchemeParams(2, 0.5, 2, 3));
        CHECK(u(3, 0) == std::complex<double>(1.0));
        CHECK(u(0, 3) == std::complex<double>(1.0));
        CHECK(u(1, 1) == std::complex<double>(1.0));
        CHECK(u(2, 2) == std::complex<double>(1.0));
        CHECK(u.cwiseAbs().sum() == 4.0);
    }
    SUBCASE("random completions are unitary with column 0 = |y>") {
        std::mt19937_64 rng(3);
        for (int t = 0; t < 20; ++t) {
            std::vector<BasisLabel> perm(8);
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            SchemeParams params(3, 0.2, 2, perm[0], perm);
            Eigen::MatrixXcd u = build_completion_unitary(params);
            CHECK((u * u.adjoint() - Eigen::MatrixXcd::Identity(8, 8)).cwiseAbs().maxCoeff() < 1e-14);
            CHECK(u(perm[0], 0) == std::complex<double>(1.0));
        }
    }
}

TEST_CASE("run_scheme_dm examples") {
    SchemeResult a = run_scheme_dm(SchemeParams(1, 0.5, 2, 1));
    CHECK(a.survival == doctest::Approx(0.625).epsilon(1e-14));
    CHECK(*a.error_rate == doctest::Approx(0.1).epsilon(1e-14));

    SchemeResult b = run_scheme_dm(SchemeParams(2, 0.5, 3, 1));
    CHECK(b.survival == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(*b.error_rate == doctest::Approx(3.0 / 128.0).epsilon(1e-13));

    OracleRun c = run_scheme_dm_full(SchemeParams(2, 0.0, 4, 2));
    CHECK(c.final_rho.trace() == doctest::Approx(1.0).epsilon(1e-15));
    auto i = static_cast<Eigen::Index>(c.final_rho.index(2, 2));
    CHECK(c.final_rho.matrix()(i, i).real() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(c.final_rho.matrix().cwiseAbs().sum() - 1.0) < 1e-15);

    CHECK_THROWS_AS(run_scheme_dm(SchemeParams(kMaxOracleQubits + 1, 0.5, 2, 1)), ConfigError);
}

TEST_CASE("channel maps preserve or reduce trace") {
    SchemeParams params(2, 0.35, 3, 2);
    Eigen::MatrixXcd u = build_completion_unitary(params);
    DensityMatrix rho(2);
    // A mixed, non-diagonal starting state.
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(16);
    psi(0) = std::sqrt(0.5);
    psi(rho.index(1, 3)) = std::complex<double>(0.0, std::sqrt(0.3));
    psi(rho.index(2, 0)) = std::sqrt(0.2);
    rho.matrix() = psi * psi.adjoint();

    double t0 = rho.trace();
    apply_noisy_unitary(rho, u, params.p());
    CHECK(std::abs(rho.trace() - t0) < 1e-15);
    CHECK(rho.hermiticity_defect() < 1e-15);
    CHECK(rho.min_eigenvalue() > -1e-12);
    apply_cnot2(rho);
    apply_cnot1(rho);
    CHECK(std::abs(rho.trace() - t0) < 1e-15);
    double before = rho.trace();
    apply_absorb(rho);
    CHECK(rho.trace() <= before + 1e-15);
    CHECK(rho.min_eigenvalue() > -1e-12);
}

TEST_CASE("CNOT maps are XOR involutions on basis projectors") {
    DensityMatrix rho(2);
    auto i = static_cast<Eigen::Index>(rho.index(3, 1));
    rho.matrix()(i, i) = 1.0;
    apply_cnot2(rho);
    auto j = static_cast<Eigen::Index>(rho.index(3, 2));
    CHECK(rho.matrix()(j, j) == std::complex<double>(1.0));
    apply_cnot1(rho);
    auto k = static_cast<Eigen::Index>(rho.index(1, 2));
    CHECK(rho.matrix()(k, k) == std::complex<double>(1.0));
}

TEST_CASE("compare passes on a grid and checkpoints stay diagonal") {
    for (unsigned n = 1; n <= 3; ++n) {
        for (double p : {0.0, 0.1, 0.5, 0.9, 1.0}) {
            for (unsigned k : {1u, 2u, 3u, 5u}) {
                INFO("N=" << n << " p=" << p << " k=" << k);
                CompareReport r = compare(SchemeParams(n, p, k, 1));
                CHECK(r.passed);
                CHECK(r.max_off_diagonal < 1e-12);
                CHECK(r.trace_deficit_dev < 1e-12);
                if (p == 0.0) {
                    CHECK(r.max_entry_dev == 0.0);
                    CHECK(r.survival_dev == 0.0);
                }
            }
        }
    }
}

TEST_CASE("compare at N=4 with a non-swap completion") {
    std::vector<BasisLabel> perm(16);
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937_64 rng(4);
    std::shuffle(perm.begin(), perm.end(), rng);
    CompareReport r = compare(SchemeParams(4, 0.3, 3, perm[0], perm));
    CHECK(r.passed);
}

TEST_CASE("dense oracle agrees across completions") {
    std::mt19937_64 rng(11);
    SchemeResult ref = run_scheme_dm(SchemeParams(3, 0.4, 4, 5));
    for (int t = 0; t < 5; ++t) {
        std::vector<BasisLabel> rest{0, 1, 2, 3, 4, 6, 7};
        std::shuffle(rest.begin(), rest.end(), rng);
        std::vector<BasisLabel> perm{5};
        perm.insert(perm.end(), rest.begin(), rest.end());
        SchemeResult r = run_scheme_dm(SchemeParams(3, 0.4, 4, 5, perm));
        for (const auto &[at, w] : ref.final_state.weights()) {
            CHECK(std::abs(r.final_state.weight(at) - w) < 1e-15);
        }
    }
}

TEST_CASE("compare catches a corrupted fast path") {
    CompareReport r = compare(SchemeParams(2, 0.5, 3, 1), corrupted_channels());
    CHECK_FALSE(r.passed);
    CHECK(r.max_entry_dev > 1e-6);
}
