#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "extremal/conflevel.h"

using namespace extremal;

TEST_SUITE("conflevel") {

TEST_CASE("closed-form inversions") {
    const ConfidenceResult a = upper_conf_bound(2, 0.0, 0.05);
    CHECK(std::abs(a.m_u - 0.776393202250021030) <= 1e-9);
    CHECK(a.root_found);
    CHECK(a.method == ConfMethod::ExactN2);
    CHECK(std::abs(a.achieved - 0.05) <= 1e-9);

    const ConfidenceResult b = upper_conf_bound(2, 0.5, 0.64);
    CHECK(std::abs(b.m_u - 0.4) <= 1e-9);

    const ConfidenceResult c = upper_conf_bound(1, 0.25, 2.0 / 3.0);
    CHECK(std::abs(c.m_u - 0.5) <= 1e-9);
    CHECK(c.method == ConfMethod::ExactN2);
}

TEST_CASE("method label for n >= 3") {
    const ConfidenceResult r = upper_conf_bound(3, 0.5, 0.1);
    CHECK(r.method == ConfMethod::CandidateHeuristic);
    CHECK(method_label(r.method) == "CANDIDATE_HEURISTIC");
    CHECK(method_label(ConfMethod::ExactN2) == "EXACT_N2");
    CHECK(r.root_found);
    CHECK(std::abs(r.achieved - 0.1) <= 1e-9);
    // t = 0: the value function is (1-m)^3.
    CHECK(std::abs(upper_conf_bound(3, 0.0, 0.1).m_u - (1.0 - std::cbrt(0.1))) <= 1e-9);
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(upper_conf_bound(2, 0.5, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(upper_conf_bound(2, 0.5, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(upper_conf_bound(2, 2.0, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(upper_conf_bound(2, -0.1, 0.1), std::invalid_argument);
}

TEST_CASE("no root when alpha is below the value near m = 1") {
    // p_2(m, 1.9) stays near 1 until m is close to 1.
    const ConfidenceResult r = upper_conf_bound(2, 1.9999, 1e-12);
    CHECK_FALSE(r.root_found);
    CHECK(r.m_u == doctest::Approx(1.0 - kConfEps));
    CHECK(r.achieved > 1e-12);
}

TEST_CASE("property: coverage above m_u") {
    for (int n : {1, 2, 3}) {
        for (double t : {0.0, 0.3, 0.8}) {
            for (double alpha : {0.01, 0.05, 0.2}) {
                const ConfidenceResult r = upper_conf_bound(n, t, alpha);
                REQUIRE(r.root_found);
                CHECK(std::abs(r.achieved - alpha) <= 1e-9);
                for (int i = 0; i < 100; ++i) {
                    const double m = r.m_u + (1.0 - kConfEps - r.m_u) * i / 99.0;
                    CHECK(conf_value_function(n, m, t) <= alpha + 1e-9);
                }
            }
        }
    }
}

TEST_CASE("property: m_u is monotone in t and alpha") {
    for (int n : {1, 2, 3}) {
        double prev = 0.0;
        for (int i = 0; i < 10; ++i) {
            const double t = 0.09 * i;
            const double m_u = upper_conf_bound(n, t, 0.05).m_u;
            CHECK(m_u >= prev - 1e-10);
            prev = m_u;
        }
        prev = 1.0;
        for (double alpha : {0.01, 0.02, 0.05, 0.1, 0.2, 0.5}) {
            const double m_u = upper_conf_bound(n, 0.4, alpha).m_u;
            CHECK(m_u <= prev + 1e-10);
            prev = m_u;
        }
    }
}

}  // TEST_SUITE
