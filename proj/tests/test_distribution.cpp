#include <doctest.h>

#include <random>

#include "brute.h"
#include "extremal/distribution.h"
#include "extremal/text.h"

using namespace extremal;

namespace {

std::vector<brute::Point> points_of(const DiscreteDistribution& d) {
    std::vector<brute::Point> out;
    for (const Atom& a : d.atoms()) out.push_back({a.x, a.p});
    return out;
}

// Random law on [0,1] with k atoms; locations drawn from a coarse lattice
// so that coinciding sums actually occur.
DiscreteDistribution random_law(std::mt19937_64& rng, int k) {
    std::uniform_int_distribution<int> loc(0, 20);
    std::uniform_real_distribution<double> w(0.05, 1.0);
    std::vector<Atom> atoms;
    double total = 0.0;
    for (int i = 0; i < k; ++i) {
        atoms.push_back({loc(rng) / 20.0, w(rng)});
        total += atoms.back().p;
    }
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < atoms.size(); ++i) {
        atoms[i].p /= total;
        acc += atoms[i].p;
    }
    atoms.back().p = 1.0 - acc;
    return DiscreteDistribution::make(atoms);
}

}  // namespace

TEST_SUITE("distcore") {

TEST_CASE("make_distribution validates and merges") {
    const auto point = DiscreteDistribution::make({{0.5, 1.0}});
    REQUIRE(point.size() == 1);
    CHECK(point.atoms()[0].x == 0.5);

    const auto merged = DiscreteDistribution::make({{0.0, 0.5}, {1.0, 0.25}, {1.0, 0.25}});
    REQUIRE(merged.size() == 2);
    CHECK(merged.atoms()[1].x == 1.0);
    CHECK(merged.atoms()[1].p == doctest::Approx(0.5).epsilon(1e-15));

    CHECK_THROWS_AS(DiscreteDistribution::make({{0.0, 0.5}, {0.5, 0.6}}), std::invalid_argument);
    CHECK_THROWS_AS(DiscreteDistribution::make({}), std::invalid_argument);
    CHECK_THROWS_AS(DiscreteDistribution::make({{1.5, 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(DiscreteDistribution::make({{-0.1, 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(DiscreteDistribution::make({{0.2, 1.2}, {0.4, -0.2}}), std::invalid_argument);
}

TEST_CASE("zero weights are dropped and near atoms merged") {
    const auto d = DiscreteDistribution::make({{0.3, 0.0}, {0.5, 0.5}, {0.5 + 1e-13, 0.5}});
    REQUIRE(d.size() == 1);
    CHECK(d.atoms()[0].p == doctest::Approx(1.0));
    // Atoms separated by more than the tolerance stay apart.
    CHECK(DiscreteDistribution::make({{0.5, 0.5}, {0.5 + 1e-9, 0.5}}).size() == 2);
}

TEST_CASE("mean") {
    CHECK(DiscreteDistribution::make({{0.0, 0.5}, {1.0, 0.5}}).mean() == 0.5);
    CHECK(DiscreteDistribution::point_mass(0.37).mean() == 0.37);
    CHECK(DiscreteDistribution::make({{0.25, 0.8}, {1.0, 0.2}}).mean() == doctest::Approx(0.4).epsilon(1e-15));
}

TEST_CASE("iid_sum examples") {
    const auto coin = DiscreteDistribution::make({{0.0, 0.5}, {1.0, 0.5}});
    const SumDistribution s3 = iid_sum(coin, 3);
    REQUIRE(s3.atoms().size() == 4);
    const double expected[] = {0.125, 0.375, 0.375, 0.125};
    for (int i = 0; i < 4; ++i) {
        CHECK(s3.atoms()[i].x == doctest::Approx(i));
        CHECK(s3.atoms()[i].p == doctest::Approx(expected[i]).epsilon(1e-14));
    }

    const SumDistribution sm = iid_sum(DiscreteDistribution::point_mass(0.3), 5);
    REQUIRE(sm.atoms().size() == 1);
    CHECK(sm.atoms()[0].x == doctest::Approx(1.5));
    CHECK(sm.atoms()[0].p == 1.0);

    const SumDistribution sq = iid_sum(DiscreteDistribution::make({{0.25, 0.8}, {1.0, 0.2}}), 2);
    REQUIRE(sq.atoms().size() == 3);
    CHECK(sq.atoms()[0].x == doctest::Approx(0.5));
    CHECK(sq.atoms()[0].p == doctest::Approx(0.64).epsilon(1e-14));
    CHECK(sq.atoms()[1].x == doctest::Approx(1.25));
    CHECK(sq.atoms()[1].p == doctest::Approx(0.32).epsilon(1e-14));
    CHECK(sq.atoms()[2].p == doctest::Approx(0.04).epsilon(1e-14));
}

TEST_CASE("iid_sum budget guard") {
    std::vector<Atom> atoms;
    for (int i = 0; i < 20; ++i) atoms.push_back({i / 19.0, 1.0 / 20.0});
    const auto wide = DiscreteDistribution::make(atoms);
    CHECK(count_vectors(20, 20) > kMaxCountVectors);
    CHECK_THROWS_AS(iid_sum(wide, 20), BudgetExceeded);
    CHECK_NOTHROW(iid_sum(wide, 3));
}

TEST_CASE("cdf_at counts boundary atoms") {
    const SumDistribution sq = iid_sum(DiscreteDistribution::make({{0.25, 0.8}, {1.0, 0.2}}), 2);
    CHECK(sq.cdf_at(0.5) == doctest::Approx(0.64).epsilon(1e-14));
    CHECK(sq.cdf_at(0.5 - 1e-9) == 0.0);
    CHECK(sq.cdf_at(2.0) == doctest::Approx(1.0).epsilon(1e-14));
    const SumDistribution s3 = iid_sum(DiscreteDistribution::make({{0.0, 0.5}, {1.0, 0.5}}), 3);
    CHECK(s3.cdf_at(1.0) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("interval_prob is half-open") {
    const SumDistribution s1 = iid_sum(DiscreteDistribution::make({{0.0, 0.5}, {1.0, 0.5}}), 1);
    CHECK(s1.interval_prob(-0.5, 0.0) == 0.5);
    CHECK(s1.interval_prob(0.0, 0.5) == 0.0);
    const SumDistribution sq = iid_sum(DiscreteDistribution::make({{0.25, 0.8}, {1.0, 0.2}}), 2);
    CHECK(sq.interval_prob(0.5, 1.5) == doctest::Approx(0.32).epsilon(1e-14));
    CHECK_THROWS_AS(sq.interval_prob(1.0, 0.5), std::invalid_argument);
}

TEST_CASE("binom_cdf") {
    // 0.4^3 + 3 * 0.6 * 0.4^2
    CHECK(binom_cdf(3, 0.6, 1) == doctest::Approx(0.352).epsilon(1e-14));
    CHECK(binom_cdf(7, 0.3, 7) == 1.0);
    CHECK(binom_cdf(5, 0.3, 0) == doctest::Approx(std::pow(0.7, 5)).epsilon(1e-14));
    CHECK(binom_cdf(5, 0.3, -0.5) == 0.0);
    // Large-n path agrees with the direct sum at the switch-over.
    CHECK(binom_cdf(100, 0.3, 30) == doctest::Approx(0.5491236).epsilon(1e-6));
}

TEST_CASE("Problem validation") {
    CHECK_THROWS_AS(Problem::make(0, 0.5, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(Problem::make(2, 0.0, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(Problem::make(2, 1.0, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(Problem::make(2, 0.5, -0.1), std::invalid_argument);
    CHECK(Problem::make(2, 0.5, 0.9).nontrivial());
    CHECK_FALSE(Problem::make(2, 0.5, 1.0).nontrivial());
}

TEST_CASE("distribution text format") {
    const auto d = parse_distribution("0:0.5, 0.25:0.3,1:0.2");
    REQUIRE(d.size() == 3);
    CHECK(d.atoms()[1].x == 0.25);
    CHECK(parse_distribution(format_distribution(d)).approx_equal(d, 0.0));
    CHECK_THROWS_AS(parse_distribution("0:0.5,1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_distribution("0:0.5,,1:0.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_distribution("a:0.5,1:0.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_distribution("0:0.5:1,1:0.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_distribution(""), std::invalid_argument);
    CHECK(format_real(0.1) == "0.10000000000000001");
}

TEST_CASE("property: iid_sum matches ordered-outcome enumeration") {
    std::mt19937_64 rng(20240611);
    for (int trial = 0; trial < 60; ++trial) {
        const int k = 1 + static_cast<int>(rng() % 4);
        const int n = 1 + static_cast<int>(rng() % 5);
        const auto d = random_law(rng, k);
        const SumDistribution s = iid_sum(d, n);
        CHECK(s.total() == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(s.mean() == doctest::Approx(n * d.mean()).epsilon(1e-10));
        double prev = 0.0;
        for (int i = 0; i <= 40; ++i) {
            const double x = n * i / 40.0;
            const double c = s.cdf_at(x);
            CHECK(c >= prev - 1e-15);
            prev = c;
            CHECK(std::abs(c - brute::cdf(points_of(d), n, x)) <= 1e-12);
        }
        CHECK(s.cdf_at(n) == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("property: iid_sum with n = 1 reproduces the law") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const auto d = random_law(rng, 1 + static_cast<int>(rng() % 5));
        const SumDistribution s = iid_sum(d, 1);
        REQUIRE(s.atoms().size() == d.size());
        for (std::size_t i = 0; i < d.size(); ++i) {
            CHECK(s.atoms()[i].x == d.atoms()[i].x);
            CHECK(s.atoms()[i].p == d.atoms()[i].p);
        }
    }
}

TEST_CASE("property: interval_prob is additive") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 4);
        const SumDistribution s = iid_sum(random_law(rng, 3), n);
        double pts[3] = {u01(rng) * n, u01(rng) * n, u01(rng) * n};
        std::sort(pts, pts + 3);
        CHECK(std::abs(s.interval_prob(pts[0], pts[1]) + s.interval_prob(pts[1], pts[2]) -
                       s.interval_prob(pts[0], pts[2])) <= 1e-12);
    }
}

TEST_CASE("property: Bernoulli convolution equals binomial CDF") {
    for (int n = 1; n <= 10; ++n) {
        for (double p : {0.05, 0.3, 0.5, 0.77, 0.99}) {
            const SumDistribution s = iid_sum(DiscreteDistribution::make({{0.0, 1.0 - p}, {1.0, p}}), n);
            for (int i = -1; i <= 2 * n + 1; ++i) {
                const double x = i / 2.0;
                CHECK(std::abs(s.cdf_at(x) - binom_cdf(n, p, x)) <= 1e-12);
            }
        }
    }
}

}  // TEST_SUITE
