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

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>

#include "adjsup/protocol.hpp"

using namespace adjsup;
using Rational = boost::multiprecision::cpp_rational;

namespace {

double rel(double got, double want) {
    if (got == want) return 0.0;
    return std::abs(got - want) / std::abs(want);
}

// Exact per-label surviving weights (correct, each wrong) after t applications.
std::pair<double, double> exact_branch(unsigned n, double p, unsigned t) {
    Rational rp(p);
    Rational d(boost::multiprecision::cpp_int(1) << n);
    Rational c = 1 - (d - 1) * rp / d;
    Rational w = rp / d;
    Rational ct = 1, wt = 1;
    for (unsigned i = 0; i < t; ++i) {
        ct *= c;
        wt *= w;
    }
    return {ct.convert_to<double>(), wt.convert_to<double>()};
}

}  // namespace

TEST_CASE("run_scheme examples") {
    SUBCASE("N=1, y=1, p=0.5, k=2") {
        SchemeResult r = run_scheme(SchemeParams(1, 0.5, 2, 1));
        CHECK(r.survival == doctest::Approx(0.625).epsilon(1e-15));
        REQUIRE(r.error_rate);
        CHECK(*r.error_rate == doctest::Approx(0.1).epsilon(1e-14));
        CHECK(r.final_state.weight({1, 1}) == doctest::Approx(0.5625).epsilon(1e-15));
        CHECK(r.final_state.weight({0, 0}) == doctest::Approx(0.0625).epsilon(1e-15));
    }
    SUBCASE("N=2, p=0.5, k=3 for every y") {
        for (BasisLabel y = 0; y < 4; ++y) {
            SchemeResult r = run_scheme(SchemeParams(2, 0.5, 3, y));
            CHECK(r.survival == doctest::Approx(0.25).epsilon(1e-15));
            REQUIRE(r.error_rate);
            CHECK(*r.error_rate == doctest::Approx(3.0 / 128.0).epsilon(1e-14));
        }
    }
    SUBCASE("p=0 is noiseless") {
        for (unsigned n = 1; n <= 6; ++n) {
            for (unsigned k : {1u, 2u, 7u}) {
                BasisLabel y = (1u << n) - 1;
                SchemeResult r = run_scheme(SchemeParams(n, 0.0, k, y));
                CHECK(r.survival == 1.0);
                CHECK(*r.error_rate == 0.0);
                CHECK(r.final_state.size() == 1);
                CHECK(r.final_state.weight({y, y}) == 1.0);
            }
        }
    }
    SUBCASE("k=1 is one noisy forward run") {
        for (unsigned n = 1; n <= 5; ++n) {
            SchemeResult r = run_scheme(SchemeParams(n, 0.3, 1, 1));
            double d = std::ldexp(1.0, n);
            CHECK(r.survival == doctest::Approx(1.0).epsilon(1e-15));
            CHECK(r.final_state.absorbed() == 0.0);
            CHECK(*r.error_rate == doctest::Approx((d - 1) * 0.3 / d).epsilon(1e-13));
        }
    }
}

TEST_CASE("property: branch-weight law holds at every cycle") {
    for (unsigned n = 1; n <= 5; ++n) {
        for (double p : {0.1, 0.5, 0.9, 1.0}) {
            const unsigned k = 12;
            BasisLabel y = n % 2 == 0 ? 0 : 1;
            SchemeResult r = run_scheme(SchemeParams(n, p, k, y));
            REQUIRE(r.per_cycle.size() == k);
            const double d = std::ldexp(1.0, n);
            for (const CycleRecord &c : r.per_cycle) {
                INFO("N=" << n << " p=" << p << " t=" << c.applications);
                auto [correct, wrong_each] = exact_branch(n, p, c.applications);
                CHECK(rel(c.correct_weight, correct) < 1e-12);
                CHECK(rel(c.wrong_weight, (d - 1) * wrong_each) < 1e-12);
                CHECK(rel(c.survival, correct + (d - 1) * wrong_each) < 1e-12);
            }
            auto [correct, wrong_each] = exact_branch(n, p, k);
            for (const auto &[at, w] : r.final_state.weights()) {
                CHECK(at.output == at.ancilla);
                CHECK(rel(w, at.output == y ? correct : wrong_each) < 1e-12);
            }
            CHECK(r.final_state.size() == static_cast<std::size_t>(d));
            CHECK(std::abs(r.survival - (1.0 - r.final_state.absorbed())) < 1e-12);
            CHECK(std::abs(total_mass(r.final_state) - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("property: sparsity bound and mass conservation") {
    for (unsigned n = 1; n <= 8; ++n) {
        SchemeResult r = run_scheme(SchemeParams(n, 0.25, 6, 1));
        CHECK(r.final_state.size() <= (std::size_t{1} << n) + 1);
        CHECK(std::abs(total_mass(r.final_state) - 1.0) < 1e-12);
    }
}

TEST_CASE("property: both registers give the same answer") {
    SchemeResult r = run_scheme(SchemeParams(3, 0.4, 5, 6));
    auto out = conditional_distribution(r.final_state, Register::Output);
    auto anc = conditional_distribution(r.final_state, Register::Ancilla);
    CHECK(out == anc);
}

TEST_CASE("property: error rate nonincreasing in k, flat at p = 1") {
    for (unsigned n = 1; n <= 4; ++n) {
        for (double p : {0.1, 0.5, 0.9}) {
            double prev = 1.0;
            for (unsigned k = 1; k <= 20; ++k) {
                double e = *run_scheme(SchemeParams(n, p, k, 1)).error_rate;
                CHECK(e <= prev);
                prev = e;
            }
        }
        double flat = (std::ldexp(1.0, n) - 1) / std::ldexp(1.0, n);
        for (unsigned k = 1; k <= 20; ++k) {
            CHECK(*run_scheme(SchemeParams(n, 1.0, k, 1)).error_rate == doctest::Approx(flat).epsilon(1e-13));
        }
    }
}

TEST_CASE("survival underflow is flagged, not thrown") {
    // Every branch carries 2^(-4 k) or less, below the smallest subnormal for k = 300.
    SchemeResult r = run_scheme(SchemeParams(4, 1.0, 300, 1));
    CHECK(r.final_state.size() == 0);
    REQUIRE(r.all_absorbed_at);
    CHECK(*r.all_absorbed_at > 2);
    CHECK(!r.error_rate);
    CHECK(r.survival == 0.0);
    CHECK(std::abs(r.final_state.absorbed() - 1.0) < 1e-12);
    VerifyReport v = verify_against_analytic(r);
    CHECK(v.underflow);
    CHECK(v.passed);
}

TEST_CASE("verify_against_analytic") {
    SUBCASE("quoted points agree to 1e-12 relative") {
        for (auto [n, p, k] : {std::tuple{2u, 0.5, 10u}, std::tuple{4u, 0.1, 5u}}) {
            VerifyReport v = verify_against_analytic(run_scheme(SchemeParams(n, p, k, 1)));
            CHECK(v.passed);
            CHECK(v.error_rate.rel_dev < 1e-12);
            CHECK(v.survival.rel_dev < 1e-12);
        }
    }
    SUBCASE("p=0 matches exactly") {
        VerifyReport v = verify_against_analytic(run_scheme(SchemeParams(5, 0.0, 9, 1)));
        CHECK(v.passed);
        CHECK(v.error_rate.abs_dev == 0.0);
        CHECK(v.survival.abs_dev == 0.0);
    }
    SUBCASE("a corrupted channel is caught") {
        VerifyReport v = verify_against_analytic(run_scheme(SchemeParams(2, 0.5, 3, 1), corrupted_channels()));
        CHECK_FALSE(v.passed);
    }
}

TEST_CASE("sweep") {
    SUBCASE("empty grid") {
        CHECK(sweep({}).empty());
    }
    SUBCASE("single point equals run_scheme") {
        std::vector<SchemeParams> grid{SchemeParams(2, 0.3, 4, 2)};
        auto out = sweep(grid);
        REQUIRE(out.size() == 1);
        SchemeResult direct = run_scheme(grid[0]);
        const auto &swept = std::get<SchemeResult>(out[0]);
        CHECK(swept.final_state == direct.final_state);
        CHECK(swept.error_rate == direct.error_rate);
    }
    SUBCASE("fig3 grid keeps input order and verifies") {
        std::vector<SchemeParams> grid;
        for (int i = 1; i <= 9; ++i) {
            for (unsigned k = 1; k <= 30; ++k) {
                grid.emplace_back(2, i / 10.0, k, 1);
            }
        }
        auto out = sweep(grid, 8);
        REQUIRE(out.size() == 270);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const auto &r = std::get<SchemeResult>(out[i]);
            CHECK(r.params.p() == grid[i].p());
            CHECK(r.params.k() == grid[i].k());
            CHECK(verify_against_analytic(r).passed);
        }
    }
    SUBCASE("per-point errors are recorded without aborting") {
        ChannelSet flaky;
        flaky.forward_qa = [](const DiagonalState &s, const SchemeParams &params) {
            if (params.k() == 2) {
                throw InvariantError("boom");
            }
            return apply_forward_qa(s, params);
        };
        std::vector<SchemeParams> grid{SchemeParams(1, 0.5, 1, 1), SchemeParams(1, 0.5, 2, 1),
                                       SchemeParams(1, 0.5, 3, 1)};
        auto out = sweep(grid, 3, flaky);
        CHECK(std::holds_alternative<SchemeResult>(out[0]));
        CHECK(std::get<std::string>(out[1]) == "boom");
        CHECK(std::holds_alternative<SchemeResult>(out[2]));
    }
}
