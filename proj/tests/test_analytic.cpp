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
#include <limits>

#include "adjsup/analytic.hpp"
#include "adjsup/state.hpp"

using namespace adjsup;
using Rational = boost::multiprecision::cpp_rational;

namespace {

// Exact evaluation of the surviving branch weights for the double p actually
// passed in (the conversion double -> rational is exact).
struct ExactPoint {
    Rational correct;
    Rational wrong_total;
    Rational epsilon() const { return wrong_total / (wrong_total + correct); }
    Rational zeta() const { return 1 - wrong_total - correct; }
};

ExactPoint exact(unsigned n, double p, unsigned k) {
    Rational rp(p);
    Rational d = Rational(boost::multiprecision::cpp_int(1) << n);
    Rational c = 1 - (d - 1) * rp / d;
    Rational w = rp / d;
    Rational ck = 1, wk = 1;
    for (unsigned i = 0; i < k; ++i) {
        ck *= c;
        wk *= w;
    }
    return {ck, (d - 1) * wk};
}

double to_double(const Rational &r) {
    return r.convert_to<double>();
}

double rel(double got, double want) {
    if (got == want) return 0.0;
    return std::abs(got - want) / std::abs(want);
}

constexpr double kGridP[] = {0.0, 0.05, 0.1, 0.25, 0.5, 0.75, 0.9, 1.0};

}  // namespace

TEST_CASE("epsilon at the quoted points") {
    // 3 / (5^10 + 3)
    CHECK(std::abs(epsilon(2, 0.5, 10) - 3.0 / 9765628.0) < 1e-20);
    CHECK(std::abs(epsilon(2, 0.5, 10) - 3.0720e-7) < 1e-11);
    CHECK(std::abs(epsilon(4, 0.1, 5) - 2.3402e-10) < 1e-14);
    CHECK(epsilon(4, 0.1, 5) < 3e-10);
}

TEST_CASE("epsilon limits") {
    for (unsigned n = 1; n <= 10; ++n) {
        for (unsigned k = 1; k <= 50; ++k) {
            CHECK(epsilon(n, 0.0, k) == 0.0);
            CHECK(log_epsilon(n, 0.0, k) == -std::numeric_limits<double>::infinity());
            CHECK(epsilon(n, 1.0, k) == (std::ldexp(1.0, n) - 1) / std::ldexp(1.0, n));
        }
    }
    CHECK(epsilon(2, 1.0, 7) == 0.75);
}

TEST_CASE("zeta and expected runs") {
    CHECK(zeta(2, 0.5, 3) == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(zeta(1, 0.5, 2) == doctest::Approx(0.375).epsilon(1e-15));
    CHECK(zeta(3, 0.0, 9) == 0.0);
    CHECK(expected_runs(2, 0.5, 3) == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(expected_runs(3, 0.0, 9) == 1.0);
    CHECK(std::abs(expected_runs(4, 0.1, 5) - 1.6359) < 1e-3);
    for (unsigned n = 1; n <= 6; ++n) {
        CHECK(zeta(n, 0.7, 1) == 0.0);
    }
}

TEST_CASE("branch weights") {
    BranchWeights a = branch_weights(1, 0.5, 2);
    CHECK(a.correct == doctest::Approx(0.5625).epsilon(1e-15));
    CHECK(a.wrong_total == doctest::Approx(0.0625).epsilon(1e-15));
    BranchWeights b = branch_weights(2, 0.4, 1);
    CHECK(b.correct == doctest::Approx(0.7).epsilon(1e-15));
    CHECK(b.wrong_total == doctest::Approx(0.3).epsilon(1e-15));
    BranchWeights c = branch_weights(5, 0.0, 4);
    CHECK(c.correct == 1.0);
    CHECK(c.wrong_total == 0.0);
    CHECK(c.log_wrong_total == -std::numeric_limits<double>::infinity());
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(epsilon(0, 0.5, 1), ConfigError);
    CHECK_THROWS_AS(epsilon(2, -0.5, 1), ConfigError);
    CHECK_THROWS_AS(epsilon(2, 1.5, 1), ConfigError);
    CHECK_THROWS_AS(epsilon(2, 0.5, 0), ConfigError);
    CHECK_THROWS_AS(zeta(2, std::nan(""), 1), ConfigError);
}

TEST_CASE("closed forms match exact rational evaluation") {
    for (unsigned n = 1; n <= 8; ++n) {
        for (double p : kGridP) {
            for (unsigned k = 1; k <= 25; ++k) {
                INFO("N=" << n << " p=" << p << " k=" << k);
                ExactPoint ex = exact(n, p, k);
                AnalyticPoint a = analytic_point(n, p, k);
                CHECK(rel(a.epsilon, to_double(ex.epsilon())) < 1e-12);
                CHECK(std::abs(a.zeta - to_double(ex.zeta())) < 1e-15);
                CHECK(rel(a.survival, to_double(1 - ex.zeta())) < 1e-12);
                CHECK(rel(std::exp(a.log_correct_weight), to_double(ex.correct)) < 1e-12);
                CHECK(rel(std::exp(a.log_wrong_weight_total), to_double(ex.wrong_total)) < 1e-12);
                CHECK(rel(a.expected_runs, to_double(1 / (1 - ex.zeta()))) < 1e-12);
            }
        }
    }
}

TEST_CASE("property: invariants of AnalyticPoint") {
    for (unsigned n = 1; n <= 10; ++n) {
        double ceiling = 1.0 - std::ldexp(1.0, -static_cast<int>(n));
        for (double p : kGridP) {
            for (unsigned k = 1; k <= 40; ++k) {
                AnalyticPoint a = analytic_point(n, p, k);
                CHECK(a.epsilon >= 0.0);
                CHECK(a.epsilon <= ceiling);
                CHECK(a.zeta >= 0.0);
                CHECK(a.zeta <= 1.0);
                CHECK(a.expected_runs >= 1.0);
                if (1.0 - a.zeta > 1e-3) {
                    // Below that, 1 - zeta itself has too few significant digits.
                    CHECK(a.expected_runs == doctest::Approx(1.0 / (1.0 - a.zeta)).epsilon(1e-12));
                }
                CHECK(
                    std::abs(std::exp(a.log_correct_weight) + std::exp(a.log_wrong_weight_total) - (1.0 - a.zeta)) <
                    1e-12);
                BranchWeights w = branch_weights(n, p, k);
                if (w.wrong_total + w.correct > 0.0 && p > 0.0 && p < 1.0) {
                    CHECK(rel(a.epsilon, w.wrong_total / (w.wrong_total + w.correct)) < 1e-12);
                }
            }
        }
    }
}

TEST_CASE("property: strictly decreasing in k for 0 < p < 1") {
    for (double p : {0.05, 0.1, 0.25, 0.5, 0.75, 0.9, 0.99}) {
        for (unsigned n = 1; n <= 10; ++n) {
            for (unsigned k = 1; k < 50; ++k) {
                CHECK(log_epsilon(n, p, k + 1) < log_epsilon(n, p, k));
            }
        }
    }
}

TEST_CASE("property: dependence on N") {
    // One application: epsilon = (2^N - 1)p/2^N grows with N.
    for (double p : {0.05, 0.5, 0.9}) {
        for (unsigned n = 1; n < 10; ++n) {
            CHECK(epsilon(n + 1, p, 1) > epsilon(n, p, 1));
        }
    }
    // Small p: decreasing in N for every k >= 2.
    for (double p : {0.05, 0.1, 0.25}) {
        for (unsigned n = 1; n < 10; ++n) {
            for (unsigned k = 2; k <= 20; ++k) {
                CHECK(log_epsilon(n + 1, p, k) < log_epsilon(n, p, k));
            }
        }
    }
    // Any p < 1, k >= 2: the ratio [2^N(1/p-1)+1]^k / (2^N-1) grows like
    // 2^(N(k-1)), so epsilon eventually decreases in N.
    for (double p : {0.5, 0.75, 0.9, 0.99}) {
        for (unsigned k = 2; k <= 5; ++k) {
            for (unsigned n = 30; n < 40; ++n) {
                CHECK(log_epsilon(n + 1, p, k) < log_epsilon(n, p, k));
            }
        }
    }
    // ...but not from N = 1. At p = 0.5, k = 2: 1/(1 + 9) < 1/(1 + 25/3).
    CHECK(epsilon(1, 0.5, 2) == doctest::Approx(0.1).epsilon(1e-14));
    CHECK(epsilon(2, 0.5, 2) == doctest::Approx(3.0 / 28.0).epsilon(1e-14));
    CHECK(epsilon(2, 0.5, 2) > epsilon(1, 0.5, 2));
    // Reversal at N = 1, k = 2 sets in at p = 2 / (3 + sqrt(3)).
    double edge = 2.0 / (3.0 + std::sqrt(3.0));
    CHECK(epsilon(2, edge - 1e-6, 2) < epsilon(1, edge - 1e-6, 2));
    CHECK(epsilon(2, edge + 1e-6, 2) > epsilon(1, edge + 1e-6, 2));
}

TEST_CASE("deep tail stays finite in log space") {
    double log_eps = log_epsilon(2, 0.5, 10000);
    CHECK(std::isfinite(log_eps));
    CHECK(log_eps < -16000.0);
    CHECK(epsilon(2, 0.5, 10000) == 0.0);
    BranchWeights w = branch_weights(2, 0.5, 10000);
    CHECK(std::isfinite(w.log_correct));
    CHECK(std::isfinite(w.log_wrong_total));
    CHECK(w.wrong_total == 0.0);
    CHECK(std::abs((w.log_wrong_total - w.log_correct) - log_eps) < 1e-6);
}

// The failure probability as printed drops the (2^N - 1) factor on the wrong
// branch. Record both so a change to either is visible.
TEST_CASE("regression: zeta with and without the wrong-branch multiplicity") {
    auto printed = [](unsigned n, double p, unsigned k) {
        double d = std::ldexp(1.0, n);
        return 1.0 - std::pow(p / d, k) - std::pow(1.0 - (d - 1.0) / d * p, k);
    };
    struct Row {
        unsigned n;
        double p;
        unsigned k;
    };
    for (Row r : {Row{4, 0.1, 5}, Row{2, 0.5, 10}, Row{2, 0.5, 3}, Row{1, 0.5, 2}}) {
        double d = std::ldexp(1.0, r.n);
        double gap = printed(r.n, r.p, r.k) - zeta(r.n, r.p, r.k);
        CHECK(gap == doctest::Approx((d - 2.0) * std::pow(r.p / d, r.k)).epsilon(1e-6));
    }
    CHECK(zeta(4, 0.1, 5) == doctest::Approx(0.38872012481689455).epsilon(1e-14));
    CHECK(printed(4, 0.1, 5) == doctest::Approx(0.38872012495040895).epsilon(1e-12));
    // Both readings give the quoted ~1.6 repetitions.
    for (double z : {zeta(4, 0.1, 5), printed(4, 0.1, 5)}) {
        CHECK(1.0 / (1.0 - z) > 1.60);
        CHECK(1.0 / (1.0 - z) < 1.67);
    }
    // N = 1 has a single wrong label, so the readings coincide.
    CHECK(printed(1, 0.5, 2) == doctest::Approx(zeta(1, 0.5, 2)).epsilon(1e-15));
}
