#include <doctest.h>

#include <cmath>
#include <random>

#include "extremal/exact2.h"
#include "extremal/lagrange.h"

using namespace extremal;

namespace {

const DiscreteDistribution& half_law() {
    static const auto d = DiscreteDistribution::make({{0.25, 0.8}, {1.0, 0.2}});
    return d;
}

}  // namespace

TEST_SUITE("lagrange") {

TEST_CASE("ell examples") {
    const Problem p = Problem::make(2, 0.4, 0.5);
    const Certificate c{16.0 / 15.0, 16.0 / 15.0};
    CHECK(std::abs(ell_at(half_law(), p, c, 0.25)) <= 1e-15);
    CHECK(std::abs(ell_at(half_law(), p, c, 1.0)) <= 1e-15);
    CHECK(ell_at(half_law(), p, c, 0.6) == doctest::Approx(16.0 / 15.0 * 0.4).epsilon(1e-14));
}

TEST_CASE("ell is left-continuous at jumps") {
    // P(X <= 0.5 - x) drops from 0.8 to 0 just after x = 0.25.
    const Problem p = Problem::make(2, 0.4, 0.5);
    const Certificate c{16.0 / 15.0, 16.0 / 15.0};
    const double at = ell_at(half_law(), p, c, 0.25);
    const double right = ell_at(half_law(), p, c, 0.25 + 1e-9);
    CHECK(std::abs(at) <= 1e-12);
    CHECK(right == doctest::Approx(16.0 / 15.0 * (0.75 - 1e-9)).epsilon(1e-12));
}

TEST_CASE("fit examples") {
    const Certificate c = fit_certificate(half_law(), Problem::make(2, 0.4, 0.5));
    CHECK(c.lambda1 == doctest::Approx(16.0 / 15.0).epsilon(1e-14));
    CHECK(c.lambda2 == doctest::Approx(16.0 / 15.0).epsilon(1e-14));

    const auto zt = DiscreteDistribution::make({{0.0, 1.0 / 3.0}, {0.9, 2.0 / 3.0}});
    const Certificate c2 = fit_certificate(zt, Problem::make(2, 0.6, 0.9));
    CHECK(c2.lambda1 == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(c2.lambda2 == doctest::Approx(0.740740740740740741).epsilon(1e-14));

    CHECK_THROWS_AS(fit_certificate(DiscreteDistribution::point_mass(0.4), Problem::make(2, 0.4, 0.5)),
                    std::invalid_argument);
}

TEST_CASE("verify worked certificate") {
    const VerifyReport r = fit_and_verify(half_law(), Problem::make(2, 0.4, 0.5));
    CHECK(r.passed);
    CHECK(r.fit_defined);
    CHECK(r.support_condition_ok);
    CHECK(r.max_violation_l1 <= kL1Tol);
    CHECK(r.max_violation_l2 <= kL2Tol);
    CHECK(r.implied_value == doctest::Approx(0.64).epsilon(1e-14));
    CHECK(r.direct_value == doctest::Approx(0.64).epsilon(1e-14));
}

TEST_CASE("verify rejects Bernoulli") {
    const auto bern = DiscreteDistribution::make({{0.0, 0.6}, {1.0, 0.4}});
    const Problem p = Problem::make(2, 0.4, 0.5);
    const Certificate c = fit_certificate(bern, p);
    const VerifyReport r = verify(bern, p, c);
    CHECK_FALSE(r.passed);
    CHECK(r.max_violation_l1 > kL1Tol);
    CHECK(r.direct_value == doctest::Approx(0.36).epsilon(1e-14));
}

TEST_CASE("single atom is routed to failure") {
    const VerifyReport r = fit_and_verify(DiscreteDistribution::point_mass(0.4), Problem::make(2, 0.4, 0.5));
    CHECK_FALSE(r.passed);
    CHECK_FALSE(r.fit_defined);
    CHECK(std::isnan(r.certificate.lambda1));
}

TEST_CASE("support condition exempts the atom at 1") {
    // For {0.25, 1} at t = 0.5, t - 1 = -0.5 is not an atom of S_1.
    const VerifyReport r = fit_and_verify(half_law(), Problem::make(2, 0.4, 0.5));
    CHECK(r.support_condition_ok);
    // Moving the lower atom breaks t - a = a.
    const auto off = DiscreteDistribution::make({{0.2, 0.75}, {1.0, 0.25}});
    const VerifyReport bad = fit_and_verify(off, Problem::make(2, 0.4, 0.5));
    CHECK_FALSE(bad.support_condition_ok);
    CHECK_FALSE(bad.passed);
}

TEST_CASE("verify rejects a bad grid") {
    const Problem p = Problem::make(2, 0.4, 0.5);
    CHECK_THROWS_AS(verify(half_law(), p, fit_certificate(half_law(), p), 1), std::invalid_argument);
}

TEST_CASE("property: exact n = 2 maximizers pass with a positive multiplier") {
    int checked = 0;
    for (int j = 1; j < 30; ++j) {
        const double t = 2.0 * j / 30.0;
        for (int i = 1; i < 30; ++i) {
            const double m = i / 30.0;
            if (t >= 2.0 * m) continue;
            const Problem p = Problem::make(2, m, t);
            for (const Maximizer& mx : solve_n2(p).maximizers) {
                const VerifyReport r = fit_and_verify(mx.distribution, p);
                CHECK_MESSAGE(r.passed, "m=", m, " t=", t, " region=", region_label(mx.region));
                CHECK(r.certificate.lambda2 > 0.0);
                CHECK(std::abs(r.implied_value - r.direct_value) <= kImpliedValueTol);
                ++checked;
            }
        }
    }
    CHECK(checked > 300);
}

TEST_CASE("property: a violation persists when the grid doubles") {
    std::mt19937_64 rng(1234);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int failures = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const double a = 0.5 * u(rng);
        const double b = 0.5 + 0.5 * u(rng);
        const double pb = u(rng);
        const auto mu = DiscreteDistribution::make({{a, 1.0 - pb}, {b, pb}});
        const double m = mu.mean();
        if (!(m > 0.0 && m < 1.0)) continue;
        const Problem p = Problem::make(2, m, 2.0 * m * u(rng));
        const Certificate c = fit_certificate(mu, p);
        for (int g : {7, 50, 333}) {
            const VerifyReport lo = verify(mu, p, c, g);
            const VerifyReport hi = verify(mu, p, c, 2 * g);
            CHECK(hi.max_violation_l1 >= lo.max_violation_l1);
            if (lo.max_violation_l1 > kL1Tol) {
                CHECK(hi.max_violation_l1 > kL1Tol);
                ++failures;
            }
        }
    }
    CHECK(failures > 0);
}

TEST_CASE("property: implied value equals direct value when ell vanishes on the atoms") {
    std::mt19937_64 rng(555);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const double a = 0.5 * u(rng);
        const double b = 0.5 + 0.5 * u(rng);
        const double pb = 0.05 + 0.9 * u(rng);
        const auto mu = DiscreteDistribution::make({{a, 1.0 - pb}, {b, pb}});
        const int n = 2 + static_cast<int>(trial % 3);
        const Problem p = Problem::make(n, mu.mean(), n * mu.mean() * u(rng));
        const VerifyReport r = fit_and_verify(mu, p);
        // With two atoms the fit is exact, so ell = 0 on the support.
        CHECK(r.max_violation_l2 <= 1e-12);
        CHECK(std::abs(r.implied_value - r.direct_value) <= 1e-9);
    }
}

}  // TEST_SUITE
